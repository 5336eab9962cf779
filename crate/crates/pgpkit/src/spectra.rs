//! Loop counts, exact graph-norm lower bounds, and floating norm
//! estimation.

use crate::graph::{Bigraph, Pgp, Side};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SpectraError {
    #[error("power iteration did not converge within {0} iterations")]
    NonConvergence(usize),
}

/// Rational lower bound plus floating estimate of a graph norm.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub norm_lower: BigRational,
    pub norm_estimate: f64,
    pub index_estimate: f64,
}

pub fn spectral_data(g: &Bigraph) -> Result<SpectralData, SpectraError> {
    let est2 = norm_squared(g, 1e-12)?;
    Ok(SpectralData {
        norm_lower: norm_lower_bound(g, 10),
        norm_estimate: est2.sqrt(),
        index_estimate: est2,
    })
}

/// Number of closed walks of length 2n at the basepoint, exactly.
pub fn loop_count(pgp: &Pgp, side: Side, n: usize) -> BigUint {
    loop_count_graph(&pgp.g[side], n)
}

pub fn loop_count_graph(g: &Bigraph, n: usize) -> BigUint {
    let (a, ids) = g.adjacency();
    if ids.is_empty() {
        return BigUint::zero();
    }
    let mut v: Vec<BigUint> = vec![BigUint::zero(); ids.len()];
    v[0] = BigUint::one();
    for _ in 0..2 * n {
        v = apply(&a, &v);
    }
    v[0].clone()
}

fn apply(a: &[Vec<u32>], v: &[BigUint]) -> Vec<BigUint> {
    (0..v.len())
        .map(|i| {
            let mut s = BigUint::zero();
            for (j, &m) in a[i].iter().enumerate() {
                if m > 0 {
                    s += &v[j] * BigUint::from(m);
                }
            }
            s
        })
        .collect()
}

/// Exact squared power-iteration ratio ||A^{k+1} v||^2 / ||A^k v||^2 with v
/// the all-ones vector. Always a lower bound for the squared graph norm,
/// and monotone non-decreasing in `iterations`.
pub fn norm_lower_bound_sq(g: &Bigraph, iterations: usize) -> BigRational {
    assert!(iterations >= 1);
    let (a, ids) = g.adjacency();
    if ids.is_empty() {
        return BigRational::zero();
    }
    let mut v: Vec<BigUint> = vec![BigUint::one(); ids.len()];
    for _ in 0..iterations - 1 {
        v = apply(&a, &v);
    }
    let w = apply(&a, &v);
    let dot = |x: &[BigUint]| -> BigUint { x.iter().map(|c| c * c).sum() };
    let num = dot(&w);
    let den = dot(&v);
    if den.is_zero() {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational lower bound on the graph norm itself: a fixed-precision
/// downward rounding of the square root of [`norm_lower_bound_sq`].
pub fn norm_lower_bound(g: &Bigraph, iterations: usize) -> BigRational {
    let r = norm_lower_bound_sq(g, iterations);
    rational_sqrt_floor(&r, 40)
}

/// Certified lower bound for the squared norm: the exact Rayleigh quotient
/// of the adjacency matrix at an integer quantization of a power-iterated
/// vector. Valid for any test vector, so the bound is sound regardless of
/// convergence.
pub fn rayleigh_lower_bound_sq(g: &Bigraph) -> BigRational {
    let (a, ids) = g.adjacency();
    let n = ids.len();
    if n == 0 {
        return BigRational::zero();
    }
    let mut v = vec![1.0f64; n];
    let mut prev = 0.0;
    let cap = 512 + 4 * n * n;
    for k in 0..cap {
        let mut w = vec![0.0; n];
        for i in 0..n {
            let mut s = v[i];
            for (j, &m) in a[i].iter().enumerate() {
                if m > 0 {
                    s += m as f64 * v[j];
                }
            }
            w[i] = s;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in w.iter_mut() {
            *x /= norm;
        }
        v = w;
        if k % 16 == 0 {
            let mut ray = 0.0;
            for i in 0..n {
                let mut s = 0.0;
                for (j, &m) in a[i].iter().enumerate() {
                    if m > 0 {
                        s += m as f64 * v[j];
                    }
                }
                ray += v[i] * s;
            }
            if (ray - prev).abs() < 1e-12 && k > 32 {
                break;
            }
            prev = ray;
        }
    }
    // exact Rayleigh quotient at the quantized vector
    let scale = (1u64 << 24) as f64;
    let q: Vec<BigInt> = v.iter().map(|x| BigInt::from((x * scale).round() as i64)).collect();
    let mut num = BigInt::zero();
    let mut den = BigInt::zero();
    for i in 0..n {
        den += &q[i] * &q[i];
        for (j, &m) in a[i].iter().enumerate() {
            if m > 0 {
                num += &q[i] * &q[j] * BigInt::from(m);
            }
        }
    }
    if den.is_zero() || !num.is_positive() {
        return BigRational::zero();
    }
    let rho = BigRational::new(num, den);
    &rho * &rho
}

/// Exact test `norm_lower_bound_sq(g) <= limit` with machine integers where
/// they cannot overflow, falling back to big integers.
pub fn norm_bound_within(g: &Bigraph, iterations: usize, limit: &BigRational) -> bool {
    let (a, ids) = g.adjacency();
    let n = ids.len();
    if n == 0 {
        return true;
    }
    // u128 path: entries stay below deg^(it+1) * n, squares summed below
    // 2^127 for the sizes the enumerator meets
    let mut v = vec![1u128; n];
    let mut ok = true;
    'iter: for _ in 0..iterations - 1 {
        let mut w = vec![0u128; n];
        for i in 0..n {
            let mut s: u128 = 0;
            for (j, &m) in a[i].iter().enumerate() {
                if m > 0 {
                    match v[j].checked_mul(m as u128).and_then(|x| s.checked_add(x)) {
                        Some(x) => s = x,
                        None => {
                            ok = false;
                            break 'iter;
                        }
                    }
                }
            }
            w[i] = s;
        }
        v = w;
    }
    if ok {
        let apply = |v: &[u128]| -> Option<Vec<u128>> {
            let mut w = vec![0u128; n];
            for i in 0..n {
                let mut s: u128 = 0;
                for (j, &m) in a[i].iter().enumerate() {
                    if m > 0 {
                        s = v[j].checked_mul(m as u128).and_then(|x| s.checked_add(x))?;
                    }
                }
                w[i] = s;
            }
            Some(w)
        };
        let dot = |x: &[u128]| -> Option<u128> {
            let mut s: u128 = 0;
            for &c in x {
                s = c.checked_mul(c).and_then(|y| s.checked_add(y))?;
            }
            Some(s)
        };
        if let (Some(w), Some(den)) = (apply(&v), dot(&v)) {
            if let Some(num) = dot(&w) {
                if den == 0 {
                    return true;
                }
                // num/den <= p/q  <=>  num*q <= p*den
                let p = limit.numer();
                let q = limit.denom();
                if let (Some(pu), Some(qu)) = (p.to_u128(), q.to_u128()) {
                    if let (Some(lhs), Some(rhs)) = (num.checked_mul(qu), pu.checked_mul(den)) {
                        return lhs <= rhs;
                    }
                }
                let lhs = BigInt::from(num) * BigInt::from(q.clone());
                let rhs = BigInt::from(p.clone()) * BigInt::from(den);
                return lhs <= rhs;
            }
        }
    }
    norm_lower_bound_sq(g, iterations) <= *limit
}

/// Largest rational with denominator 2^bits whose square is <= r.
pub fn rational_sqrt_floor(r: &BigRational, bits: usize) -> BigRational {
    if r.is_negative() || r.is_zero() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << bits;
    let scaled = (r.numer() * &scale * &scale) / r.denom();
    let root = scaled.to_biguint().unwrap().sqrt();
    BigRational::new(BigInt::from(root), scale)
}

/// Squared graph norm by shifted power iteration with a Rayleigh quotient.
pub fn norm_squared(g: &Bigraph, tol: f64) -> Result<f64, SpectraError> {
    let (a, ids) = g.adjacency();
    let n = ids.len();
    if n == 0 {
        return Ok(0.0);
    }
    if a.iter().all(|row| row.iter().all(|&m| m == 0)) {
        return Ok(0.0);
    }
    // shift by +1 so the bipartite +/- eigenvalue pair cannot stall the
    // iteration
    let mut v = vec![1.0f64 / (n as f64).sqrt(); n];
    let mut prev = f64::INFINITY;
    let cap = 20_000_000usize;
    let mut k = 0usize;
    loop {
        let mut w = vec![0.0; n];
        for i in 0..n {
            let mut s = v[i]; // the +1 shift
            for (j, &m) in a[i].iter().enumerate() {
                if m > 0 {
                    s += m as f64 * v[j];
                }
            }
            w[i] = s;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in w.iter_mut() {
            *x /= norm;
        }
        // Rayleigh quotient of the unshifted matrix
        let mut ray = 0.0;
        for i in 0..n {
            let mut s = 0.0;
            for (j, &m) in a[i].iter().enumerate() {
                if m > 0 {
                    s += m as f64 * w[j];
                }
            }
            ray += w[i] * s;
        }
        v = w;
        k += 1;
        if (ray - prev).abs() < tol * 1e-3 && k > 32 {
            return Ok(ray * ray);
        }
        prev = ray;
        if k > cap {
            return Err(SpectraError::NonConvergence(cap));
        }
    }
}

pub fn pgp_index_estimate(pgp: &Pgp, tol: f64) -> Result<f64, SpectraError> {
    Ok(norm_squared(&pgp.g[0], tol)?.max(norm_squared(&pgp.g[1], tol)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_any_graph, parse_pgp, Mode};
    use crate::fixtures;
    use num_traits::FromPrimitive;

    fn chain(k: usize) -> Bigraph {
        Bigraph { roots: 1, rows: (0..k).map(|_| vec![vec![1]]).collect() }
    }

    #[test]
    fn catalan_loops() {
        // long path: loops of length 2n are Dyck paths
        let p = parse_pgp(
            "bwd1v1v1v1v1v1v1v1duals1v1v1v1v1,bwd1v1v1v1v1v1v1v1duals1v1v1v1v1",
            Mode::Enumeration,
        )
        .unwrap();
        assert_eq!(loop_count(&p, 0, 3), BigUint::from(5u32));
        assert_eq!(loop_count(&p, 0, 0), BigUint::from(1u32));
        assert_eq!(loop_count(&p, 0, 4), BigUint::from(14u32));
    }

    #[test]
    fn haagerup_loops_match_matrix_power() {
        let h = parse_pgp(fixtures::HAAGERUP, Mode::Enumeration).unwrap();
        // matrix-power oracle
        let (a, ids) = h.g[0].adjacency();
        let n = ids.len();
        let mut m = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = BigUint::one();
        }
        for _ in 0..8 {
            let mut nm = vec![vec![BigUint::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    if a[i][j] > 0 {
                        for k in 0..n {
                            let t = &m[j][k] * BigUint::from(a[i][j]);
                            nm[i][k] += t;
                        }
                    }
                }
            }
            m = nm;
        }
        assert_eq!(loop_count(&h, 0, 4), m[0][0]);
    }

    #[test]
    fn single_edge_norm() {
        let g = chain(1);
        let lb = norm_lower_bound(&g, 5);
        assert_eq!(lb, BigRational::one());
        assert!((norm_squared(&g, 1e-10).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn path_of_three() {
        let g = chain(2);
        let lb = norm_lower_bound(&g, 10).to_f64().unwrap();
        assert!(lb > 1.41 && lb * lb <= 2.0 + 1e-12, "lb = {lb}");
        assert!((norm_squared(&g, 1e-10).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn monotone_in_iterations() {
        let g = parse_any_graph("gbg1v1v1p1v1x0p0x1v1x1").unwrap();
        let mut prev = BigRational::zero();
        for it in 1..12 {
            let b = norm_lower_bound(&g, it);
            assert!(b >= prev);
            prev = b;
        }
        let top = norm_squared(&g, 1e-12).unwrap().sqrt();
        assert!(prev.to_f64().unwrap() <= top + 1e-9);
    }

    #[test]
    fn triple_edge_norm_is_nine() {
        let g = parse_any_graph("gbg3").unwrap();
        assert!((norm_squared(&g, 1e-10).unwrap() - 9.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_norms() {
        assert_eq!(norm_squared(&Bigraph::point(), 1e-10).unwrap(), 0.0);
    }

    #[test]
    fn weed_f9_bound_exceeds_index_five() {
        let p = parse_pgp(fixtures::WEEDS_10[8], Mode::Enumeration).unwrap();
        let lb = norm_lower_bound(&p.g[0], 10);
        assert!(lb > BigRational::from_f64(2.236).unwrap());
    }
}
