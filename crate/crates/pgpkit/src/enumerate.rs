//! The canonical-construction-path enumeration engine.
//!
//! Children of a node are the automorphism-orbit representatives of its
//! upper objects, accepted exactly when genuine (the inverse lower object
//! lies in the canonical reduction orbit of the result). The traversal then
//! visits one representative per isomorphism class.

use crate::canonical::{canonical_form, encode, pgp_automorphisms, pgp_certificate, subset_orbits};
use crate::graph::{Pgp, Vertex};
use crate::invariants::{
    associativity_ok, check_pgp_associativity, duality_constraint, triple_point_obstruction,
    ultimate_associativity, TriplePointVerdict,
};
use crate::spectra::{norm_bound_within, rayleigh_lower_bound_sq};
use num_traits::ToPrimitive;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU64, Ordering};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum EnumError {
    #[error("node budget of {0} exceeded")]
    ResourceLimit(u64),
}

/// An upper object: a generating step applicable to a PGP.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum UpperObject {
    /// Increase the working depth.
    IncreaseDepth,
    /// New self-dual vertex on `side`, joined to the subset `v` of the
    /// previous depth (even working depth only).
    SelfDual { side: usize, v: Vec<usize> },
    /// New dual pair. At even working depth both vertices live on `side`
    /// (unordered subsets); at odd working depth the first vertex goes on
    /// the principal graph, the second on the dual graph.
    DualPair { side: usize, v1: Vec<usize>, v2: Vec<usize> },
}

/// A lower object: a reduction applicable to a PGP.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LowerObject {
    DecreaseDepth,
    /// Delete the self-dual working-depth vertex (side, idx).
    SelfDual(usize, usize),
    /// Delete a dual pair of working-depth vertices.
    DualPair((usize, usize), (usize, usize)),
}

impl LowerObject {
    pub fn removed(&self, wd: usize) -> Vec<Vertex> {
        match self {
            LowerObject::DecreaseDepth => Vec::new(),
            LowerObject::SelfDual(s, i) => vec![Vertex::new(*s, wd, *i)],
            LowerObject::DualPair((s1, i1), (s2, i2)) => {
                vec![Vertex::new(*s1, wd, *i1), Vertex::new(*s2, wd, *i2)]
            }
        }
    }
}

#[derive(Clone)]
pub struct EnumConfig {
    /// Exact upper bound for the index (squared norm).
    pub index_limit: BigRational,
    /// Nodes never raise the working depth beyond this.
    pub depth_limit: usize,
    /// Power-iteration count for the exact norm prune.
    pub norm_iterations: usize,
    /// Prune subtrees that are exactly 1-supertransitive.
    pub ignore_1st: bool,
    /// Prune subtrees that are at least 4-supertransitive.
    pub ignore_4st: bool,
    /// Keep the depth-1 row at one vertex (irreducible subfactors).
    pub irreducible: bool,
    /// Certificates of PGPs whose subtrees are not expanded; matched nodes
    /// are reported instead.
    pub stop_set: BTreeSet<Vec<u8>>,
    /// Cheap pre-filter for the stop set: count profiles of its members.
    pub stop_profiles: BTreeSet<Vec<usize>>,
    /// Abort after this many nodes.
    pub node_budget: u64,
    /// The A+B-C-D early associativity prune.
    pub assoc_prune: bool,
    /// Tail mode: the depth-0 row has unknown back-edges, so constraints
    /// touching depth-0 neighbourhoods are skipped.
    pub unknown_head: bool,
    /// Number of rayon workers (1 = sequential).
    pub workers: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            index_limit: BigRational::new(21.into(), 4.into()),
            depth_limit: 64,
            norm_iterations: 10,
            ignore_1st: false,
            ignore_4st: false,
            irreducible: true,
            stop_set: BTreeSet::new(),
            stop_profiles: BTreeSet::new(),
            node_budget: 50_000_000,
            assoc_prune: true,
            unknown_head: false,
            workers: 1,
        }
    }
}

#[derive(Default, Debug, Clone, Serialize)]
pub struct EnumStats {
    pub nodes_considered: u64,
    pub emitted: u64,
    pub stopped: u64,
    pub frontier: u64,
}

/// Outcome of an enumeration run. All lists are sorted by certificate, so
/// output is deterministic regardless of the worker count.
pub struct EnumOutput {
    /// Finished graphs: no working-depth vertices and associativity at the
    /// ultimate depth.
    pub emitted: Vec<Pgp>,
    /// Nodes matching the stop set (not expanded).
    pub stopped: Vec<Pgp>,
    /// Maximal nodes cut by the depth limit with a complete final row.
    pub frontier: Vec<Pgp>,
    pub stats: EnumStats,
}

struct Shared<'a> {
    cfg: &'a EnumConfig,
    nodes: AtomicU64,
}

#[derive(Default)]
struct Bucket {
    emitted: Vec<(Vec<u8>, Pgp)>,
    stopped: Vec<(Vec<u8>, Pgp)>,
    frontier: Vec<(Vec<u8>, Pgp)>,
}

impl Bucket {
    fn merge(&mut self, other: Bucket) {
        self.emitted.extend(other.emitted);
        self.stopped.extend(other.stopped);
        self.frontier.extend(other.frontier);
    }
}

/// Exact index prune: reject when a certified lower bound for either
/// squared norm exceeds the limit. The cheap power ratio goes first; the
/// sharper Rayleigh certificate decides the rest.
pub fn within_index_limit(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    for s in 0..2 {
        if !norm_bound_within(&pgp.g[s], cfg.norm_iterations, &cfg.index_limit) {
            return false;
        }
        if rayleigh_lower_bound_sq(&pgp.g[s]) > cfg.index_limit {
            return false;
        }
    }
    true
}

/// Largest admissible vertex degree: a vertex of degree d forces the
/// squared norm to at least d.
fn degree_cap(cfg: &EnumConfig) -> u32 {
    cfg.index_limit.to_integer().to_u32().unwrap_or(u32::MAX)
}

/// Largest k such that rows 1..=k are single chain vertices on both graphs.
fn chain_prefix(pgp: &Pgp) -> usize {
    let mut k = 0;
    loop {
        let d = k + 1;
        if pgp.count(0, d) == 1
            && pgp.count(1, d) == 1
            && pgp.g[0].rows[d - 1][0].iter().sum::<u32>() == 1
            && pgp.g[1].rows[d - 1][0].iter().sum::<u32>() == 1
        {
            k += 1;
        } else {
            return k;
        }
    }
}

/// Subtree-ignore rules for supertransitivity.
fn ignored(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    if cfg.unknown_head {
        return false;
    }
    if cfg.ignore_1st && (pgp.count(0, 2) > 1 || pgp.count(1, 2) > 1) {
        return true; // the depth-2 row has left the chain for good
    }
    if cfg.ignore_4st && chain_prefix(pgp) >= 4 && pgp.working_depth >= 5 {
        return true; // rows 1..4 are frozen chains
    }
    false
}

/// Validity of a freshly constructed node as a PGP.
pub fn node_valid(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    if cfg.irreducible && !cfg.unknown_head && (pgp.count(0, 1) > 1 || pgp.count(1, 1) > 1) {
        return false;
    }
    if cfg.unknown_head {
        // skip conditions touching the unknown head
        let n = pgp.working_depth;
        let vs = pgp.vertices();
        let ok = vs
            .iter()
            .filter(|v| v.side == 0 && v.depth >= 1)
            .all(|&v| {
                vs.iter()
                    .filter(|w| w.side == 1 && w.depth >= 1)
                    .all(|&w| v.depth.min(w.depth) + 2 > n || associativity_ok(pgp, v, w))
            });
        return ok && within_index_limit(pgp, cfg);
    }
    // cheap combinatorial checks before any spectral work
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
    if !duality_constraint(pgp) {
        return false;
    }
    within_index_limit(pgp, cfg) && triple_point_obstruction(pgp) == TriplePointVerdict::Pass
}

fn emit_filter(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    if cfg.unknown_head && pgp.working_depth <= 1 {
        return true;
    }
    ultimate_associativity(pgp)
}

// ---------------------------------------------------------------------------
// lower objects and the choice function

pub fn lower_objects(pgp: &Pgp) -> Vec<LowerObject> {
    let wd = pgp.working_depth;
    let mut out = Vec::new();
    let (c0, c1) = (pgp.count(0, wd), pgp.count(1, wd));
    if c0 == 0 && c1 == 0 {
        if wd > 0 || pgp.level() > 0 {
            out.push(LowerObject::DecreaseDepth);
        }
        return out;
    }
    let mut seen_pairs = BTreeSet::new();
    for side in 0..2 {
        for i in 0..pgp.count(side, wd) {
            let v = Vertex::new(side, wd, i);
            let d = pgp.dual(v);
            if d == v {
                out.push(LowerObject::SelfDual(side, i));
            } else {
                let mut key = [(v.side, v.idx), (d.side, d.idx)];
                key.sort_unstable();
                if seen_pairs.insert(key) {
                    out.push(LowerObject::DualPair(key[0], key[1]));
                }
            }
        }
    }
    out
}

fn removed_degree(pgp: &Pgp, l: &LowerObject) -> u32 {
    l.removed(pgp.working_depth).iter().map(|&v| pgp.degree(v)).sum()
}

fn removes_from_dual_graph(pgp: &Pgp, l: &LowerObject) -> bool {
    l.removed(pgp.working_depth).iter().any(|v| v.side == 1)
}

/// The priority rules of the choice function; ties among the survivors are
/// broken by certificates in [`choose_reduction`].
fn preferred_lower_objects(pgp: &Pgp) -> Vec<LowerObject> {
    let mut ls = lower_objects(pgp);
    if ls.len() <= 1 {
        return ls;
    }
    let wd = pgp.working_depth;
    if pgp.count(0, wd) > 0 && pgp.count(1, wd) > 0 {
        let keep: Vec<LowerObject> =
            ls.iter().filter(|l| removes_from_dual_graph(pgp, l)).cloned().collect();
        if !keep.is_empty() {
            ls = keep;
        }
    }
    if ls.iter().any(|l| matches!(l, LowerObject::DualPair(..))) {
        ls.retain(|l| matches!(l, LowerObject::DualPair(..)));
    }
    let min_deg = ls.iter().map(|l| removed_degree(pgp, l)).min().unwrap();
    ls.retain(|l| removed_degree(pgp, l) == min_deg);
    ls
}

/// The canonical reduction orbit phi(o): the automorphism orbit of lower
/// objects selected by the priority rules, remaining ties broken by least
/// marked-encoding certificate.
pub fn choose_reduction(pgp: &Pgp) -> Vec<LowerObject> {
    let ls = preferred_lower_objects(pgp);
    if ls.len() <= 1 {
        return ls;
    }
    let (verts, gens) = pgp_automorphisms(pgp);
    let vid: BTreeMap<Vertex, usize> =
        verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    let subsets: Vec<Vec<usize>> = ls
        .iter()
        .map(|l| l.removed(pgp.working_depth).iter().map(|v| vid[v]).collect())
        .collect();
    let labels = subset_orbits(verts.len(), &gens, &subsets);
    let distinct: BTreeSet<usize> = labels.iter().copied().collect();
    if distinct.len() > 1 {
        let mut best: Option<(Vec<u8>, usize)> = None;
        for &lab in &distinct {
            let rep = ls.iter().zip(&labels).find(|(_, &l)| l == lab).map(|(l, _)| l).unwrap();
            let marked = rep.removed(pgp.working_depth);
            let (cg, _) = encode(pgp, &marked);
            let cert = canonical_form(&cg).certificate;
            match &best {
                Some((bc, _)) if *bc <= cert => {}
                _ => best = Some((cert, lab)),
            }
        }
        let chosen = best.unwrap().1;
        ls.into_iter().zip(labels).filter(|(_, l)| *l == chosen).map(|(l, _)| l).collect()
    } else {
        ls
    }
}

// ---------------------------------------------------------------------------
// upper objects

fn subsets_of(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Apply an upper object, producing the child PGP.
pub fn apply_upper(pgp: &Pgp, u: &UpperObject) -> Pgp {
    let mut child = pgp.clone();
    let wd = pgp.working_depth;
    match u {
        UpperObject::IncreaseDepth => {
            child.working_depth += 1;
        }
        UpperObject::SelfDual { side, v } => {
            let prev = pgp.count(*side, wd - 1);
            let mut mults = vec![0u32; prev];
            for &i in v {
                mults[i] = 1;
            }
            child.g[*side].rows[wd - 1].push(mults);
            let idx = child.g[*side].rows[wd - 1].len() - 1;
            child.duals[*side][wd / 2].push(idx);
        }
        UpperObject::DualPair { side, v1, v2 } => {
            if wd % 2 == 0 {
                let prev = pgp.count(*side, wd - 1);
                let make = |v: &Vec<usize>| {
                    let mut m = vec![0u32; prev];
                    for &i in v {
                        m[i] = 1;
                    }
                    m
                };
                child.g[*side].rows[wd - 1].push(make(v1));
                child.g[*side].rows[wd - 1].push(make(v2));
                let n = child.g[*side].rows[wd - 1].len();
                child.duals[*side][wd / 2].push(n - 1);
                child.duals[*side][wd / 2].push(n - 2);
            } else {
                for (s, v) in [(0usize, v1), (1usize, v2)] {
                    let prev = pgp.count(s, wd - 1);
                    let mut m = vec![0u32; prev];
                    for &i in v {
                        m[i] = 1;
                    }
                    child.g[s].rows[wd - 1].push(m);
                }
            }
        }
    }
    child.normalize_presentation();
    child
}

/// The inverse lower object of an upper object (indices in the child).
pub fn inverse_lower(pgp: &Pgp, u: &UpperObject) -> LowerObject {
    let wd = pgp.working_depth;
    match u {
        UpperObject::IncreaseDepth => LowerObject::DecreaseDepth,
        UpperObject::SelfDual { side, .. } => LowerObject::SelfDual(*side, pgp.count(*side, wd)),
        UpperObject::DualPair { side, .. } => {
            if wd % 2 == 0 {
                let n = pgp.count(*side, wd);
                LowerObject::DualPair((*side, n), (*side, n + 1))
            } else {
                LowerObject::DualPair((0, pgp.count(0, wd)), (1, pgp.count(1, wd)))
            }
        }
    }
}

/// Whether I is admissible (ignoring the depth limit): some vertex at the
/// working depth and associativity at the penultimate depth. Requiring
/// vertices on *both* graphs would lose every pair whose graphs end at
/// different depths (the Haagerup among them).
fn increase_admissible(pgp: &Pgp, cfg: &EnumConfig) -> bool {
    let wd = pgp.working_depth;
    if pgp.count(0, wd) == 0 && pgp.count(1, wd) == 0 {
        return false;
    }
    if wd == 0 {
        return true;
    }
    let d = wd - 1;
    if cfg.unknown_head && d == 0 {
        return true;
    }
    (0..pgp.count(0, d)).all(|i| {
        (0..pgp.count(1, d))
            .all(|j| associativity_ok(pgp, Vertex::new(0, d, i), Vertex::new(1, d, j)))
    })
}

/// Admissible upper objects, pre-pruned by the predictable preferences of
/// the choice function, deduplicated under the automorphism action.
pub fn upper_objects(pgp: &Pgp, cfg: &EnumConfig) -> Vec<UpperObject> {
    let wd = pgp.working_depth;
    let mut out = Vec::new();
    if wd < cfg.depth_limit && increase_admissible(pgp, cfg) {
        out.push(UpperObject::IncreaseDepth);
    }
    if wd == 0 {
        return out;
    }

    let (verts, gens) = pgp_automorphisms(pgp);
    let vid: BTreeMap<Vertex, usize> =
        verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();

    let cap = degree_cap(cfg);
    // a subset is only worth attaching to if no vertex degree overflows the
    // norm bound
    let room = |side: usize, i: usize| -> u32 {
        let d = pgp.degree(Vertex::new(side, wd - 1, i));
        cap.saturating_sub(d)
    };

    if wd % 2 == 0 {
        // adding to the principal graph is never genuine once the dual
        // graph has working-depth vertices
        let sides: Vec<usize> = if pgp.count(1, wd) > 0 { vec![1] } else { vec![0, 1] };
        for side in sides {
            let prev = pgp.count(side, wd - 1);
            if prev == 0 {
                continue;
            }
            let subs: Vec<Vec<usize>> = subsets_of(prev)
                .into_iter()
                .filter(|v| v.len() <= cap as usize && v.iter().all(|&i| room(side, i) >= 1))
                .collect();
            let ids: Vec<Vec<usize>> = subs
                .iter()
                .map(|v| v.iter().map(|&i| vid[&Vertex::new(side, wd - 1, i)]).collect())
                .collect();
            let mut seen = BTreeSet::new();
            for (k, v) in subs.iter().enumerate() {
                if seen.insert(set_orbit_min(&gens, &ids[k])) {
                    out.push(UpperObject::SelfDual { side, v: v.clone() });
                }
            }
            let mut pair_keys = BTreeSet::new();
            for a in 0..subs.len() {
                for b in a..subs.len() {
                    let joint_ok = subs[a]
                        .iter()
                        .all(|i| room(side, *i) >= 1 + subs[b].contains(i) as u32);
                    if !joint_ok {
                        continue;
                    }
                    if pair_keys.insert(pair_orbit_key(&gens, &ids[a], &ids[b], false)) {
                        out.push(UpperObject::DualPair {
                            side,
                            v1: subs[a].clone(),
                            v2: subs[b].clone(),
                        });
                    }
                }
            }
        }
    } else {
        let p0 = pgp.count(0, wd - 1);
        let p1 = pgp.count(1, wd - 1);
        if p0 > 0 && p1 > 0 {
            let good_subs = |side: usize, n: usize| -> Vec<Vec<usize>> {
                subsets_of(n)
                    .into_iter()
                    .filter(|v| v.len() <= cap as usize && v.iter().all(|&i| room(side, i) >= 1))
                    .collect()
            };
            let subs0 = good_subs(0, p0);
            let subs1 = good_subs(1, p1);
            let ids0: Vec<Vec<usize>> = subs0
                .iter()
                .map(|v| v.iter().map(|&i| vid[&Vertex::new(0, wd - 1, i)]).collect())
                .collect();
            let ids1: Vec<Vec<usize>> = subs1
                .iter()
                .map(|v| v.iter().map(|&i| vid[&Vertex::new(1, wd - 1, i)]).collect())
                .collect();
            let mut pair_keys = BTreeSet::new();
            for (a, va) in subs0.iter().enumerate() {
                for (b, vb) in subs1.iter().enumerate() {
                    if pair_keys.insert(pair_orbit_key(&gens, &ids0[a], &ids1[b], true)) {
                        out.push(UpperObject::DualPair { side: 0, v1: va.clone(), v2: vb.clone() });
                    }
                }
            }
        }
    }
    out
}

fn canon_set(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v
}

/// Lexicographic minimum of a subset orbit under the generated group.
fn set_orbit_min(gens: &[Vec<usize>], s: &[usize]) -> Vec<usize> {
    let start = canon_set(s);
    if gens.is_empty() {
        return start;
    }
    let mut best = start.clone();
    let mut seen = BTreeSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(cur) = queue.pop() {
        if cur < best {
            best = cur.clone();
        }
        for g in gens {
            let img = canon_set(&cur.iter().map(|&v| g[v]).collect::<Vec<_>>());
            if seen.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    best
}

/// Canonical key of a pair of subsets under the diagonal action (ordered or
/// unordered).
fn pair_orbit_key(gens: &[Vec<usize>], a: &[usize], b: &[usize], ordered: bool) -> Vec<usize> {
    let norm = |x: &[usize], y: &[usize]| -> Vec<usize> {
        let (x, y) = (canon_set(x), canon_set(y));
        let (x, y) = if ordered || x <= y { (x, y) } else { (y, x) };
        let mut k = x;
        k.push(usize::MAX);
        k.extend(y);
        k
    };
    let start = norm(a, b);
    if gens.is_empty() {
        return start;
    }
    let mut best = start.clone();
    let mut seen = BTreeSet::new();
    let mut queue = vec![(canon_set(a), canon_set(b))];
    seen.insert(start);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let gx: Vec<usize> = x.iter().map(|&v| g[v]).collect();
            let gy: Vec<usize> = y.iter().map(|&v| g[v]).collect();
            let k = norm(&gx, &gy);
            if seen.insert(k.clone()) {
                if k < best {
                    best = k.clone();
                }
                queue.push((canon_set(&gx), canon_set(&gy)));
            }
        }
    }
    best
}

/// Genuineness of an upper object.
pub fn genuine(pgp: &Pgp, u: &UpperObject, child: &Pgp) -> bool {
    let inv = inverse_lower(pgp, u);
    let preferred = preferred_lower_objects(child);
    if !preferred.contains(&inv) {
        return false;
    }
    if preferred.len() == 1 {
        return true;
    }
    choose_reduction(child).contains(&inv)
}

fn expand(shared: &Shared, pgp: &Pgp, bucket: &mut Bucket, rec: usize) -> Result<(), EnumError> {
    let n = shared.nodes.fetch_add(1, Ordering::Relaxed);
    if n >= shared.cfg.node_budget {
        return Err(EnumError::ResourceLimit(shared.cfg.node_budget));
    }
    if std::env::var_os("PGPENUM_PROGRESS").is_some() && (n % 2048 == 0 || std::env::var_os("PGPENUM_TRACE").is_some()) {
        eprintln!(
            "[{} nodes] wd {} verts {} l {} :: {}",
            n,
            pgp.working_depth,
            pgp.num_vertices(),
            pgp.level(),
            crate::codec::serialize_pgp(pgp)
        );
    }
    let cfg = shared.cfg;
    let wd = pgp.working_depth;
    let row_empty = pgp.count(0, wd) == 0 && pgp.count(1, wd) == 0;

    if !cfg.stop_set.is_empty() && cfg.stop_profiles.contains(&count_profile(pgp)) {
        let cert = pgp_certificate(pgp);
        if cfg.stop_set.contains(&cert) {
            bucket.stopped.push((cert, pgp.clone()));
            return Ok(());
        }
    }
    if ignored(pgp, cfg) {
        return Ok(());
    }
    if row_empty && emit_filter(pgp, cfg) {
        bucket.emitted.push((pgp_certificate(pgp), pgp.clone()));
    }

    let uppers = upper_objects(pgp, cfg);
    let children: Vec<Pgp> = uppers
        .iter()
        .filter_map(|u| {
            let child = apply_upper(pgp, u);
            if node_valid(&child, cfg) && genuine(pgp, u, &child) {
                Some(child)
            } else {
                None
            }
        })
        .collect();

    // a maximal node whose final row is complete at the depth limit is a
    // frontier graph: the only move it is denied is raising the depth
    if wd == cfg.depth_limit && children.is_empty() && increase_admissible(pgp, cfg) {
        bucket.frontier.push((pgp_certificate(pgp), pgp.clone()));
    }

    if cfg.workers > 1 && rec < 6 && children.len() > 1 {
        let results: Vec<Result<Bucket, EnumError>> = children
            .into_par_iter()
            .map(|c| {
                let mut b = Bucket::default();
                expand(shared, &c, &mut b, rec + 1)?;
                Ok(b)
            })
            .collect();
        for r in results {
            bucket.merge(r?);
        }
    } else {
        for c in children {
            expand(shared, &c, bucket, rec + 1)?;
        }
    }
    Ok(())
}

/// Run the enumeration from a root.
pub fn enumerate(root: &Pgp, cfg: &EnumConfig) -> Result<EnumOutput, EnumError> {
    let shared = Shared { cfg, nodes: AtomicU64::new(0) };
    let mut bucket = Bucket::default();
    let mut root = root.clone();
    root.normalize_presentation();
    if cfg.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .expect("rayon pool");
        pool.install(|| expand(&shared, &root, &mut bucket, 0))?;
    } else {
        expand(&shared, &root, &mut bucket, 0)?;
    }
    let done = |mut v: Vec<(Vec<u8>, Pgp)>| -> Vec<Pgp> {
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, p)| p).collect()
    };
    let stats = EnumStats {
        nodes_considered: shared.nodes.load(Ordering::Relaxed),
        emitted: bucket.emitted.len() as u64,
        stopped: bucket.stopped.len() as u64,
        frontier: bucket.frontier.len() as u64,
    };
    Ok(EnumOutput {
        emitted: done(bucket.emitted),
        stopped: done(bucket.stopped),
        frontier: done(bucket.frontier),
        stats,
    })
}

/// Pairwise-distinctness of a finished stream, by certificates.
pub fn verify_no_duplicates(stream: &[Pgp]) -> bool {
    let mut seen = BTreeSet::new();
    stream.iter().all(|p| seen.insert(pgp_certificate(p)))
}

/// Side-symmetric vertex-count profile, a cheap isomorphism invariant.
pub fn count_profile(pgp: &Pgp) -> Vec<usize> {
    let md = pgp.max_depth();
    let mut a: Vec<usize> = (0..=md).map(|d| pgp.count(0, d)).collect();
    let mut b: Vec<usize> = (0..=md).map(|d| pgp.count(1, d)).collect();
    if b < a {
        std::mem::swap(&mut a, &mut b);
    }
    let mut out = vec![pgp.working_depth];
    out.extend(a);
    out.push(usize::MAX);
    out.extend(b);
    out
}

/// Build stop-set data (certificates of both side orders plus profiles)
/// from a list of PGPs.
pub fn build_stop_set(weeds: &[Pgp]) -> (BTreeSet<Vec<u8>>, BTreeSet<Vec<usize>>) {
    let mut certs = BTreeSet::new();
    let mut profiles = BTreeSet::new();
    for w in weeds {
        certs.insert(pgp_certificate(w));
        certs.insert(pgp_certificate(&w.swap_sides()));
        profiles.insert(count_profile(w));
    }
    (certs, profiles)
}

/// The 2-vertex irreducible root all principal graphs of irreducible
/// subfactors descend from.
pub fn irreducible_root() -> Pgp {
    crate::codec::parse_pgp("bwd1duals1,bwd1duals1", crate::codec::Mode::Enumeration).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_pgp, Mode};
    use crate::fixtures;
    use num_traits::FromPrimitive;

    fn cfg_with_limit(limit: f64, depth: usize) -> EnumConfig {
        EnumConfig {
            index_limit: BigRational::from_f64(limit).unwrap(),
            depth_limit: depth,
            ..EnumConfig::default()
        }
    }

    #[test]
    fn trivial_pair_only_increases_depth() {
        let p = Pgp::empty();
        let cfg = cfg_with_limit(4.0, 4);
        assert_eq!(upper_objects(&p, &cfg), vec![UpperObject::IncreaseDepth]);
    }

    #[test]
    fn small_run_terminates_and_is_duplicate_free() {
        let cfg = cfg_with_limit(3.9, 4);
        let out = enumerate(&irreducible_root(), &cfg).unwrap();
        assert!(verify_no_duplicates(&out.emitted));
        assert!(!out.emitted.is_empty());
        for p in &out.emitted {
            assert!(ultimate_associativity(p));
            p.validate().unwrap();
        }
    }

    #[test]
    fn determinism_across_worker_counts() {
        let mut cfg = cfg_with_limit(4.4, 6);
        let a = enumerate(&irreducible_root(), &cfg).unwrap();
        cfg.workers = 4;
        let b = enumerate(&irreducible_root(), &cfg).unwrap();
        let certs = |out: &EnumOutput| -> Vec<Vec<u8>> {
            out.emitted.iter().map(crate::canonical::pgp_certificate).collect()
        };
        assert_eq!(certs(&a), certs(&b));
        assert_eq!(a.stats.nodes_considered, b.stats.nodes_considered);
    }

    #[test]
    fn level_increases_along_edges() {
        let cfg = cfg_with_limit(4.3, 5);
        let mut stack = vec![irreducible_root()];
        let mut count = 0;
        while let Some(p) = stack.pop() {
            count += 1;
            if count > 500 {
                break;
            }
            for u in upper_objects(&p, &cfg) {
                let child = apply_upper(&p, &u);
                assert!(child.level() > p.level());
                // the inverse lower object really recovers the parent
                let inv = inverse_lower(&p, &u);
                let removed = inv.removed(child.working_depth);
                let mut back = child.clone();
                remove_vertices(&mut back, &removed);
                assert_eq!(
                    crate::canonical::pgp_certificate(&back),
                    crate::canonical::pgp_certificate(&p)
                );
                if node_valid(&child, &cfg) && genuine(&p, &u, &child) {
                    stack.push(child);
                }
            }
        }
    }

    /// Test helper: delete working-depth vertices (the D move when empty).
    fn remove_vertices(pgp: &mut Pgp, removed: &[crate::graph::Vertex]) {
        if removed.is_empty() {
            pgp.working_depth -= 1;
            pgp.normalize_presentation();
            return;
        }
        let wd = pgp.working_depth;
        for side in 0..2 {
            let mut idxs: Vec<usize> =
                removed.iter().filter(|v| v.side == side).map(|v| v.idx).collect();
            idxs.sort_unstable_by(|a, b| b.cmp(a));
            for i in idxs {
                pgp.g[side].rows[wd - 1].remove(i);
                if wd % 2 == 0 {
                    let perm = &mut pgp.duals[side][wd / 2];
                    perm.remove(i);
                    for p in perm.iter_mut() {
                        if *p > i {
                            *p -= 1;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn duplicate_injection_detected() {
        let cfg = cfg_with_limit(3.9, 4);
        let out = enumerate(&irreducible_root(), &cfg).unwrap();
        let mut stream = out.emitted.clone();
        stream.push(stream[0].clone());
        assert!(!verify_no_duplicates(&stream));
        assert!(verify_no_duplicates(&[]));
    }

    #[test]
    fn stop_set_matches_haagerup() {
        let h = parse_pgp(fixtures::HAAGERUP, Mode::Enumeration).unwrap().completed();
        let mut cfg = cfg_with_limit(4.8, 8);
        cfg.stop_set.insert(crate::canonical::pgp_certificate(&h));
        cfg.stop_set.insert(crate::canonical::pgp_certificate(&h.swap_sides()));
        let out = enumerate(&irreducible_root(), &cfg).unwrap();
        assert!(out.stats.stopped >= 1, "the Haagerup node should be reached and stopped");
    }

    #[test]
    fn section44_boxed_example_not_genuine() {
        // adding a self-dual vertex to the principal graph while the dual
        // graph has working-depth vertices is pre-pruned as non-genuine
        let p = parse_pgp("bwd1v1p1duals1v2x1,bwd1v1p1duals1v2x1", Mode::Enumeration).unwrap();
        assert_eq!(p.working_depth, 2);
        let cfg = cfg_with_limit(5.3, 6);
        for u in upper_objects(&p, &cfg) {
            match &u {
                UpperObject::SelfDual { side, .. } | UpperObject::DualPair { side, .. } => {
                    assert_eq!(*side, 1);
                }
                UpperObject::IncreaseDepth => {}
            }
        }
    }
}
