//! The Ocneanu 4-partite graph of a PGP and its path counts.
//!
//! The four vertex classes are the even/odd vertices of each graph; the
//! right copies are the graphs themselves, the other two copies are twisted
//! through the duality. Path-count symmetry between opposite corners encodes
//! associativity, and 4-loops that are alone on both diagonals give doubly
//! one-by-one connection entries.

use crate::graph::{Pgp, Vertex};
use serde::Serialize;

/// Corner of the 4-partite square.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Corner {
    AA, // even vertices of the principal graph
    AB, // odd vertices of the principal graph
    BB, // even vertices of the dual graph
    BA, // odd vertices of the dual graph
}

pub fn corner(v: Vertex) -> Corner {
    match (v.side, v.depth % 2) {
        (0, 0) => Corner::AA,
        (0, _) => Corner::AB,
        (1, 0) => Corner::BB,
        _ => Corner::BA,
    }
}

fn graph_adj(pgp: &Pgp, v: Vertex, w: Vertex) -> u32 {
    debug_assert_eq!(v.side, w.side);
    if v.depth + 1 == w.depth {
        pgp.g[v.side].mult_up(v.depth, v.idx, w.idx)
    } else if w.depth + 1 == v.depth {
        pgp.g[v.side].mult_down(v.depth, v.idx, w.idx)
    } else {
        0
    }
}

/// Edge multiplicity between two vertices of the 4-partite graph.
pub fn o_adj(pgp: &Pgp, v: Vertex, w: Vertex) -> u32 {
    if v.side == w.side {
        return graph_adj(pgp, v, w);
    }
    let (p, q) = if v.side == 0 { (v, w) } else { (w, v) };
    match (p.depth % 2, q.depth % 2) {
        // twisted principal-graph copy between even AA and odd BA vertices
        (0, 1) => graph_adj(pgp, pgp.dual(p), pgp.dual(q)),
        // twisted dual-graph copy between odd AB and even BB vertices
        (1, 0) => graph_adj(pgp, pgp.dual(q), pgp.dual(p)),
        _ => 0,
    }
}

/// All 4-partite vertices, i.e. all PGP vertices.
pub fn o_vertices(pgp: &Pgp) -> Vec<Vertex> {
    pgp.vertices()
}

/// Whether two vertices sit on opposite corners of the square.
pub fn opposite_corners(v: Vertex, w: Vertex) -> bool {
    v.side != w.side && v.depth % 2 == w.depth % 2
}

/// Length-2 path counts between opposite-corner vertices, split by the two
/// ways around the square. `v` must be on side 0, `w` on side 1.
pub fn two_paths_split(pgp: &Pgp, v: Vertex, w: Vertex) -> (u64, u64) {
    debug_assert!(opposite_corners(v, w));
    let mut through_plus = 0u64; // intermediate vertex on the principal graph
    let mut through_minus = 0u64;
    for d in [v.depth.wrapping_sub(1), v.depth + 1] {
        if d == usize::MAX {
            continue;
        }
        for i in 0..pgp.count(0, d) {
            let u = Vertex::new(0, d, i);
            through_plus += o_adj(pgp, v, u) as u64 * o_adj(pgp, u, w) as u64;
        }
        for i in 0..pgp.count(1, d) {
            let u = Vertex::new(1, d, i);
            through_minus += o_adj(pgp, v, u) as u64 * o_adj(pgp, u, w) as u64;
        }
    }
    (through_plus, through_minus)
}

pub fn two_paths(pgp: &Pgp, v: Vertex, w: Vertex) -> u64 {
    let (a, b) = two_paths_split(pgp, v, w);
    a + b
}

/// A 4-loop (P, Q, R, S) that is the unique loop through both diagonals.
#[derive(Clone, Debug, Serialize)]
pub struct DoublyOneByOne {
    pub p: Vertex,
    pub q: Vertex,
    pub r: Vertex,
    pub s: Vertex,
}

/// All doubly one-by-one connection entries: loops (P,Q,R,S), one vertex in
/// each corner, with exactly 2 length-2 paths between P,R and between Q,S.
pub fn find_doubly_one_by_one(pgp: &Pgp) -> Vec<DoublyOneByOne> {
    let verts = o_vertices(pgp);
    let aa: Vec<Vertex> = verts.iter().copied().filter(|&v| corner(v) == Corner::AA).collect();
    let bb: Vec<Vertex> = verts.iter().copied().filter(|&v| corner(v) == Corner::BB).collect();
    let ab: Vec<Vertex> = verts.iter().copied().filter(|&v| corner(v) == Corner::AB).collect();
    let ba: Vec<Vertex> = verts.iter().copied().filter(|&v| corner(v) == Corner::BA).collect();
    let mut out = Vec::new();
    for &p in &aa {
        for &r in &bb {
            if two_paths(pgp, p, r) != 2 {
                continue;
            }
            // the two arcs: one through AB, one through BA
            let qs: Vec<Vertex> = ab
                .iter()
                .copied()
                .filter(|&q| o_adj(pgp, p, q) > 0 && o_adj(pgp, q, r) > 0)
                .collect();
            let ss: Vec<Vertex> = ba
                .iter()
                .copied()
                .filter(|&s| o_adj(pgp, p, s) > 0 && o_adj(pgp, s, r) > 0)
                .collect();
            if qs.len() != 1 || ss.len() != 1 {
                continue;
            }
            let (q, s) = (qs[0], ss[0]);
            if o_adj(pgp, p, q) != 1
                || o_adj(pgp, q, r) != 1
                || o_adj(pgp, p, s) != 1
                || o_adj(pgp, s, r) != 1
            {
                continue;
            }
            if two_paths(pgp, q, s) == 2 {
                out.push(DoublyOneByOne { p, q, r, s });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_pgp, Mode};
    use crate::fixtures;

    #[test]
    fn trivial_pair_is_a_4_cycle() {
        let p = parse_pgp("bwd1duals1,bwd1duals1", Mode::Enumeration).unwrap();
        let vs = o_vertices(&p);
        assert_eq!(vs.len(), 4);
        for &v in &vs {
            let deg: u32 = vs.iter().map(|&w| o_adj(&p, v, w)).sum();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn haagerup_matches_printed_4_partite() {
        // Edge multiset of the printed Ocneanu graph of the Haagerup pair,
        // transcribed figure coordinates -> (corner, depth, height).
        let h = parse_pgp(fixtures::HAAGERUP, Mode::Enumeration).unwrap();
        // an odd vertex of the principal graph meets its own graph on one
        // side of the square and (via the twist) the dual graph around its
        // dual vertex on the other
        for d in [1usize, 3, 5] {
            for i in 0..h.count(0, d) {
                let v = Vertex::new(0, d, i);
                let total: u32 = o_vertices(&h).iter().map(|&w| o_adj(&h, v, w)).sum();
                assert_eq!(total, h.degree(v) + h.degree(h.dual(v)));
            }
        }
        // the printed figure's central AB vertex (depth 3) joins six
        // distinct vertices
        let v = Vertex::new(0, 3, 0);
        let nb: u32 = o_vertices(&h).iter().map(|&w| o_adj(&h, v, w)).sum();
        assert_eq!(nb, 6);
    }

    #[test]
    fn associativity_path_symmetry_on_fixtures() {
        for s in [fixtures::HAAGERUP, fixtures::WEED_D, fixtures::WEED_F_PRIME] {
            let p = parse_pgp(s, Mode::Enumeration).unwrap();
            let vs = o_vertices(&p);
            for &v in vs.iter().filter(|v| v.side == 0) {
                for &w in vs.iter().filter(|w| w.side == 1) {
                    if !opposite_corners(v, w) {
                        continue;
                    }
                    // path symmetry holds away from the working depth
                    if v.depth + 2 <= p.working_depth && w.depth + 2 <= p.working_depth {
                        let (a, b) = two_paths_split(&p, v, w);
                        assert_eq!(a, b, "{s} {v:?} {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn a_chain_has_no_doubly_one_by_one() {
        let p = parse_pgp(
            "bwd1v1v1v1v1duals1v1v1,bwd1v1v1v1v1duals1v1v1",
            Mode::Enumeration,
        )
        .unwrap();
        assert!(find_doubly_one_by_one(&p).is_empty());
    }

    #[test]
    fn weed_d_has_the_printed_loop() {
        let p = parse_pgp(fixtures::WEED_D, Mode::Enumeration).unwrap();
        let loops = find_doubly_one_by_one(&p);
        // the loop (V^p_{4,2}, V^p_{5,2}, V^d_{6,3}, V^d_{5,3}) at t = 0
        assert!(
            loops.iter().any(|l| l.p == Vertex::new(0, 4, 1)
                && l.q == Vertex::new(0, 5, 1)
                && l.r == Vertex::new(1, 6, 2)
                && l.s == Vertex::new(1, 5, 2)),
            "loops found: {loops:?}"
        );
    }
}
