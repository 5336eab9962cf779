use pgpkit::codec::{parse_pgp, Mode};
use pgpkit::spectra::{norm_squared, norm_lower_bound_sq};
use num_traits::ToPrimitive;

fn main() {
    // the runaway node observed at working depth 40
    let s = "bwd1v1v1v1p1p1v1x0x0p1x0x0v1x0v1p1v0x1v1p1v0x1v1p1v0x1p0x1v1x0v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x0p0x1v1x0p0x1v1x0p0x1p1x0p0x1v1x1x0x0v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x0p0x1v1x0p0x1v1x0p0x1p1x0p0x1v1x1x0x0v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1p1x0v1x0x0p0x1x0v0x1p0x1p1x0v0x0x1p0x1x0p0x1x0duals1v1v1x2x3v1v1v1v1x2v1x2v1x2v2x1v1x2x3x4v1v1x2v1x2v2x1v1x2x3x4v1v1x2v1x2v2x1v1x3x2,bwd1v1v1v1p1p1v1x0x0p0x1x0v1x0p1x0p0x1v0x0x1p1x0x0v0x1p1x0p1x0p0x1v0x0x1x0p1x0x0x0v0x1p1x0p1x0p0x1v0x0x1x0p1x0x0x0v1x1p0x1v0x1v1p1v1x0p0x1v1x0p0x1p1x0p0x1v0x0x0x1p0x0x1x0v1x0p0x1v0x1p1x0v1x1v1v1p1v1x0v1p1v1x0p0x1v1x0p0x1p1x0p0x1v0x0x0x1p0x0x1x0v1x0p0x1v0x1p1x0v1x1v1v1p1v1x0v1p1v1x0p0x1v1x0p0x1p1x0p0x1v0x0x0x1p0x0x1x0p1x0x0x0v1x0x0p0x1x0p1x0x0p0x0x1v0x0x0x1p1x0x0x0p0x1x0x0v0x1x0p0x0x1duals1v1v1x2x3v1x3x2v1x2x4x3v1x2x4x3v1x2v1x2v1x2x4x3v1x2v1v1x2v1x2v1x2x4x3v1x2v1v1x2v1x2v1x2x4x3v1x2x4x3v2x1";
    let p = parse_pgp(s, Mode::Enumeration).unwrap();
    for side in 0..2 {
        let true_n2 = norm_squared(&p.g[side], 1e-12).unwrap();
        println!("side {side}: true norm^2 = {:.6}", true_n2);
        for it in [10usize, 20, 40, 60] {
            let lb = norm_lower_bound_sq(&p.g[side], it).to_f64().unwrap();
            println!("   lb({it}) = {:.6}", lb);
        }
    }
}
