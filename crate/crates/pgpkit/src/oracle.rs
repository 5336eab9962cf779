//! Brute-force generate-and-deduplicate reference enumeration.
//!
//! Independent of the canonical-construction machinery: children are *all*
//! admissible generating steps (no genuineness), and isomorph rejection is
//! done level by level with a permutation-search isomorphism test. Only
//! usable at small index and depth limits; it exists to check the real
//! enumerator.

use crate::enumerate::{apply_upper, EnumConfig, UpperObject};
use crate::graph::{Pgp, Vertex};
use crate::invariants::{
    associativity_ok, check_pgp_associativity, duality_constraint, triple_point_obstruction,
    ultimate_associativity, TriplePointVerdict,
};


/// Permutation-search isomorphism test for PGPs (no canonical labelling).
pub fn brute_force_isomorphic(a: &Pgp, b: &Pgp) -> bool {
    if a.working_depth != b.working_depth {
        return false;
    }
    let md = a.max_depth().max(b.max_depth());
    for side in 0..2 {
        for d in 0..=md {
            if a.count(side, d) != b.count(side, d) {
                return false;
            }
        }
    }
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in perms(n - 1) {
            for pos in 0..=rest.len() {
                let mut p = rest.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }
    // maps[d][side] = permutation sending a's depth-d vertices to b's
    fn extend(a: &Pgp, b: &Pgp, maps: &mut Vec<[Vec<usize>; 2]>, d: usize, md: usize) -> bool {
        if d > md {
            return true;
        }
        let choices0 = perms(a.count(0, d));
        let choices1 = perms(a.count(1, d));
        for p0 in &choices0 {
            'next: for p1 in &choices1 {
                let cand = [p0.clone(), p1.clone()];
                if d > 0 {
                    for side in 0..2 {
                        for i in 0..a.count(side, d) {
                            for j in 0..a.count(side, d - 1) {
                                let ma = a.g[side].rows[d - 1][i][j];
                                let mb = b.g[side].rows[d - 1][cand[side][i]][maps[d - 1][side][j]];
                                if ma != mb {
                                    continue 'next;
                                }
                            }
                        }
                    }
                }
                let dual_ok = (0..2).all(|side| {
                    (0..a.count(side, d)).all(|i| {
                        let da = a.dual(Vertex::new(side, d, i));
                        if da.depth != d {
                            return true; // odd depths pair by height on both
                        }
                        let db = b.dual(Vertex::new(side, d, cand[side][i]));
                        db.side == da.side && db.idx == cand[da.side][da.idx]
                    })
                });
                if !dual_ok {
                    continue 'next;
                }
                maps.push(cand);
                if extend(a, b, maps, d + 1, md) {
                    return true;
                }
                maps.pop();
            }
        }
        false
    }
    let mut maps = Vec::new();
    extend(a, b, &mut maps, 0, md)
}

fn oracle_valid(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    if cfg.irreducible && (pgp.count(0, 1) > 1 || pgp.count(1, 1) > 1) {
        return false;
    }
    if !crate::enumerate::within_index_limit(pgp, cfg) {
        return false;
    }
    if cfg.assoc_prune {
        if !check_pgp_associativity(pgp) {
            return false;
        }
    } else {
        let n = pgp.working_depth;
        let vs = pgp.vertices();
        let ok = vs.iter().filter(|v| v.side == 0).all(|&v| {
            vs.iter()
                .filter(|w| w.side == 1)
                .all(|&w| v.depth.min(w.depth) + 2 > n || associativity_ok(pgp, v, w))
        });
        if !ok {
            return false;
        }
    }
    duality_constraint(pgp) && triple_point_obstruction(pgp) == TriplePointVerdict::Pass
}

/// All admissible generating steps (no orbit reduction, no genuineness).
fn all_steps(pgp: &Pgp, cfg: &EnumConfig) -> Vec<UpperObject> {
    let wd = pgp.working_depth;
    let mut out = Vec::new();
    let has0 = pgp.count(0, wd) > 0;
    let has1 = pgp.count(1, wd) > 0;
    if (has0 || has1) && wd < cfg.depth_limit {
        let admissible = wd == 0 || {
            let d = wd - 1;
            (0..pgp.count(0, d)).all(|i| {
                (0..pgp.count(1, d))
                    .all(|j| associativity_ok(pgp, Vertex::new(0, d, i), Vertex::new(1, d, j)))
            })
        };
        if admissible {
            out.push(UpperObject::IncreaseDepth);
        }
    }
    if wd == 0 {
        return out;
    }
    let subsets = |n: usize| -> Vec<Vec<usize>> {
        (1u32..(1 << n))
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect()
    };
    if wd % 2 == 0 {
        for side in 0..2 {
            let prev = pgp.count(side, wd - 1);
            if prev == 0 {
                continue;
            }
            let subs = subsets(prev);
            for v in &subs {
                out.push(UpperObject::SelfDual { side, v: v.clone() });
            }
            for (i, v1) in subs.iter().enumerate() {
                for v2 in subs.iter().skip(i) {
                    out.push(UpperObject::DualPair { side, v1: v1.clone(), v2: v2.clone() });
                }
            }
        }
    } else {
        let p0 = pgp.count(0, wd - 1);
        let p1 = pgp.count(1, wd - 1);
        if p0 > 0 && p1 > 0 {
            for v1 in subsets(p0) {
                for v2 in subsets(p1) {
                    out.push(UpperObject::DualPair { side: 0, v1: v1.clone(), v2 });
                }
            }
        }
    }
    out
}

fn push_class(reps: &mut Vec<Pgp>, p: Pgp) -> bool {
    if reps.iter().any(|r| brute_force_isomorphic(r, &p)) {
        return false;
    }
    reps.push(p);
    true
}

/// Breadth-first generate-and-deduplicate enumeration: one representative
/// per isomorphism class of finished graphs (empty working row, ultimate
/// associativity).
pub fn brute_force_enumerate(root: &Pgp, cfg: &EnumConfig) -> Vec<Pgp> {
    let mut frontier: Vec<Pgp> = vec![root.clone()];
    let mut emitted: Vec<Pgp> = Vec::new();
    while !frontier.is_empty() {
        let mut next: Vec<Pgp> = Vec::new();
        for p in &frontier {
            let wd = p.working_depth;
            if p.count(0, wd) == 0 && p.count(1, wd) == 0 && ultimate_associativity(p) {
                push_class(&mut emitted, p.clone());
            }
            for u in all_steps(p, cfg) {
                let child = apply_upper(p, &u);
                if oracle_valid(&child, cfg) {
                    push_class(&mut next, child);
                }
            }
        }
        frontier = next;
    }
    emitted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_pgp, Mode};
    use crate::enumerate::{enumerate, irreducible_root};
    use crate::fixtures;
    use num_rational::BigRational;
    use num_traits::FromPrimitive;

    #[test]
    fn brute_force_iso_agrees_with_certificates() {
        let a = parse_pgp(fixtures::BOXED_EXT_A, Mode::Enumeration).unwrap();
        let b = parse_pgp(fixtures::BOXED_EXT_B, Mode::Enumeration).unwrap();
        assert!(brute_force_isomorphic(&a, &b));
        let h = parse_pgp(fixtures::HAAGERUP, Mode::Enumeration).unwrap();
        assert!(!brute_force_isomorphic(&a, &h));
    }

    #[test]
    fn oracle_matches_enumerator_small() {
        let cfg = crate::enumerate::EnumConfig {
            index_limit: BigRational::from_f64(3.9).unwrap(),
            depth_limit: 4,
            ..Default::default()
        };
        let fast = enumerate(&irreducible_root(), &cfg).unwrap();
        let slow = brute_force_enumerate(&irreducible_root(), &cfg);
        assert_eq!(fast.emitted.len(), slow.len());
        for p in &fast.emitted {
            let hits = slow.iter().filter(|q| brute_force_isomorphic(p, q)).count();
            assert_eq!(hits, 1);
        }
    }
}
