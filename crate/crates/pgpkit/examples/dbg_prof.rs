use pgpkit::codec::{parse_pgp, Mode};
use pgpkit::enumerate::*;
use pgpkit::canonical::*;
use pgpkit::invariants::*;
use num_rational::BigRational;
use std::time::Instant;

fn main() {
    let s = "bwd1v1v1v1p1v1x0p0x1v1x0p0x1p1x0p0x1v0x0x1x0p1x0x0x0p0x0x0x1p0x1x0x0v1x0x0x0p0x0x1x0p1x0x0x0p0x0x0x1p0x1x0x0p0x0x1x0v1x0x0x0x0x0p0x0x0x0x1x0p0x0x0x1x0x0p0x1x0x0x0x0v1x1x0x0p0x1x1x0p0x0x1x0p0x0x0x1p1x0x0x0p0x0x0x1duals1v1v1x2v1x2x4x3v1x2x4x3x6x5v1x2x4x3x6x5,bwd1v1v1v1p1v1x0p1x0v1x0p0x1v0x1p1x0p1x0p0x1v1x0x0x0p0x0x1x0v0x1p1x0p0x1p1x0v0x0x0x1p1x0x0x0duals1v1v1x2v1x2v2x1v1x2";
    let p = parse_pgp(s, Mode::Enumeration).unwrap();
    let cfg = EnumConfig { index_limit: BigRational::new(21.into(), 4.into()), ..Default::default() };

    let t = Instant::now();
    for _ in 0..10 { let _ = pgp_certificate(&p); }
    println!("pgp_certificate: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    for _ in 0..10 { let _ = pgp_automorphisms(&p); }
    println!("pgp_automorphisms: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    let ups = upper_objects(&p, &cfg);
    println!("upper_objects: {:?} ({} candidates)", t.elapsed(), ups.len());

    let t = Instant::now();
    for _ in 0..10 { let _ = dimension_relation(&p); }
    println!("dimension_relation: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    for _ in 0..10 { let _ = triple_point_obstruction(&p); }
    println!("triple_point: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    for _ in 0..10 { let _ = check_pgp_associativity(&p); }
    println!("assoc: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    for _ in 0..10 { let _ = within_index_limit(&p, &cfg); }
    println!("norm prune: {:?}/call", t.elapsed() / 10);

    let t = Instant::now();
    let mut nc = 0; let mut nv = 0;
    for u in &ups {
        let child = apply_upper(&p, u);
        nc += 1;
        if pgpkit::enumerate::genuine(&p, u, &child) { nv += 1; }
    }
    println!("apply+genuine over {} candidates: {:?} ({} genuine)", nc, t.elapsed(), nv);

    let t = Instant::now();
    let mut good = 0;
    for u in &ups {
        let child = apply_upper(&p, u);
        if pgpkit::enumerate::node_valid(&child, &cfg) { good += 1; }
    }
    println!("apply+node_valid over {} candidates: {:?} ({} valid)", ups.len(), t.elapsed(), good);
}
