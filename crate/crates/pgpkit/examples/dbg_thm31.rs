use pgpkit::canonical::pgp_certificate;
use pgpkit::codec::{parse_pgp, serialize_pgp, Mode};
use pgpkit::enumerate::{enumerate, irreducible_root, EnumConfig};
use num_rational::BigRational;
use std::collections::BTreeSet;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let num: i64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(21);
    let den: i64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(4);
    let budget: u64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(100_000);
    let weeds: Vec<_> = pgpkit::fixtures::theorem31_all().iter()
        .map(|s| parse_pgp(s, Mode::Enumeration).unwrap()).collect();
    let (stop, profiles) = pgpkit::enumerate::build_stop_set(&weeds);
    let classes: BTreeSet<Vec<u8>> = weeds.iter()
        .map(|p| pgp_certificate(p).min(pgp_certificate(&p.swap_sides()))).collect();
    eprintln!("stop set: {} certs, {} classes", stop.len(), classes.len());
    let cfg = EnumConfig {
        index_limit: BigRational::new(num.into(), den.into()),
        depth_limit: 40,
        ignore_1st: true,
        ignore_4st: true,
        stop_set: stop.clone(),
        stop_profiles: profiles,
        node_budget: budget,
        ..Default::default()
    };
    let t0 = Instant::now();
    match enumerate(&irreducible_root(), &cfg) {
        Ok(out) => {
            eprintln!("nodes {} emitted {} stopped {} in {:?}",
                out.stats.nodes_considered, out.stats.emitted, out.stats.stopped, t0.elapsed());
            let matched_classes: BTreeSet<Vec<u8>> = out.stopped.iter()
                .map(|p| pgp_certificate(p).min(pgp_certificate(&p.swap_sides())))
                .collect();
            eprintln!("matched classes: {} / {}", matched_classes.len(), classes.len());
            eprintln!("-- emitted vines: {}", out.emitted.len());
            for p in out.emitted.iter().take(50) { eprintln!("   {}", serialize_pgp(p)); }
        }
        Err(e) => eprintln!("FAILED after {:?}: {e}", t0.elapsed()),
    }
}
