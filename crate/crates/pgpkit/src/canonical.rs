//! Canonical labelling of vertex-coloured graphs by
//! individualization-refinement, and the PGP encoding whose automorphisms
//! are exactly PGP automorphisms.

use crate::graph::{Pgp, Vertex};
use std::collections::{HashMap, HashSet, VecDeque};

/// A vertex-coloured simple graph.
#[derive(Clone, Debug)]
pub struct ColouredGraph {
    pub colours: Vec<u32>,
    pub adj: Vec<Vec<usize>>,
}

impl ColouredGraph {
    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }
}

/// Canonical relabelling, certificate and automorphism generators.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// canonical[i] = original index of the vertex in canonical position i
    pub canonical_order: Vec<usize>,
    pub certificate: Vec<u8>,
    /// Generators of the automorphism group, as permutations g with
    /// g[i] = image of vertex i.
    pub generators: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

fn initial_partition(cg: &ColouredGraph) -> Partition {
    let mut by_colour: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, &c) in cg.colours.iter().enumerate() {
        by_colour.entry(c).or_default().push(i);
    }
    let mut keys: Vec<u32> = by_colour.keys().copied().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| by_colour.remove(&k).unwrap()).collect()
}

/// Equitable refinement (1-dimensional Weisfeiler-Leman). Deterministic:
/// cells are split by edge counts into a fixed order.
fn refine(cg: &ColouredGraph, mut cells: Partition) -> Partition {
    let mut queue: VecDeque<usize> = (0..cells.len()).collect();
    let mut in_queue: Vec<bool> = vec![true; cells.len()];
    while let Some(si) = queue.pop_front() {
        if si >= cells.len() {
            // stale index; cells only ever get appended, so re-enqueue all
            continue;
        }
        in_queue[si] = false;
        let splitter: HashSet<usize> = cells[si].iter().copied().collect();
        let mut ci = 0;
        while ci < cells.len() {
            if cells[ci].len() > 1 {
                let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
                for &v in &cells[ci] {
                    let d = cg.adj[v].iter().filter(|u| splitter.contains(u)).count();
                    groups.entry(d).or_default().push(v);
                }
                if groups.len() > 1 {
                    let mut keys: Vec<usize> = groups.keys().copied().collect();
                    keys.sort_unstable();
                    let mut parts: Vec<Vec<usize>> =
                        keys.into_iter().map(|k| groups.remove(&k).unwrap()).collect();
                    cells[ci] = parts.remove(0);
                    let mut at = ci + 1;
                    for p in parts {
                        cells.insert(at, p);
                        at += 1;
                    }
                    // rebuild the queue conservatively
                    queue.clear();
                    in_queue = vec![true; cells.len()];
                    for i in 0..cells.len() {
                        queue.push_back(i);
                    }
                }
            }
            ci += 1;
        }
        let _ = &in_queue;
    }
    cells
}

fn leaf_string(cg: &ColouredGraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut out = Vec::with_capacity(n * 4 + n * n / 8 + 8);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for &v in order {
        out.extend_from_slice(&cg.colours[v].to_be_bytes());
    }
    let mut bits = vec![0u8; n * n / 8 + 1];
    for &v in order {
        for &u in &cg.adj[v] {
            let (a, b) = (pos[v], pos[u]);
            if a < b {
                let k = a * n + b;
                bits[k / 8] |= 1 << (k % 8);
            }
        }
    }
    out.extend_from_slice(&bits);
    out
}

struct Search<'a> {
    cg: &'a ColouredGraph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    orbit: Vec<usize>, // union-find over vertices, grown as autos appear
}

impl<'a> Search<'a> {
    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.orbit[r] != r {
            r = self.orbit[r];
        }
        let mut c = v;
        while self.orbit[c] != c {
            let next = self.orbit[c];
            self.orbit[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let n = from.len();
        let mut g = vec![0usize; n];
        for p in 0..n {
            g[from[p]] = to[p];
        }
        if g.iter().enumerate().all(|(i, &gi)| i == gi) {
            return;
        }
        for (i, &gi) in g.iter().enumerate() {
            self.union(i, gi);
        }
        self.generators.push(g);
    }

    fn run(&mut self, cells: Partition, depth: usize) {
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let s = leaf_string(self.cg, &order);
            if let Some((fs, ford)) = &self.first {
                if *fs == s {
                    let ford = ford.clone();
                    self.record_auto(&ford, &order);
                }
            } else {
                self.first = Some((s.clone(), order.clone()));
            }
            match &self.best {
                Some((bs, bord)) => {
                    if s < *bs {
                        self.best = Some((s, order));
                    } else if s == *bs && *bord != order {
                        let bord = bord.clone();
                        self.record_auto(&bord, &order);
                    }
                }
                None => self.best = Some((s, order)),
            }
            return;
        }
        let ti = cells.iter().position(|c| c.len() > 1).unwrap();
        let targets = cells[ti].clone();
        let mut done: Vec<usize> = Vec::new();
        for &v in &targets {
            // orbit pruning is only valid where the individualized prefix is
            // stabilized by everything found so far; that holds at the root
            if depth == 0 {
                let rv = self.find(v);
                if done.iter().any(|&u| self.find(u) == rv) {
                    continue;
                }
            }
            done.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == ti {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let refined = refine(self.cg, child);
            self.run(refined, depth + 1);
        }
    }
}

pub fn canonical_form(cg: &ColouredGraph) -> CanonicalForm {
    if cg.n() == 0 {
        return CanonicalForm {
            canonical_order: Vec::new(),
            certificate: vec![0, 0, 0, 0],
            generators: Vec::new(),
        };
    }
    let cells = refine(cg, initial_partition(cg));
    let mut search = Search {
        cg,
        best: None,
        first: None,
        generators: Vec::new(),
        orbit: (0..cg.n()).collect(),
    };
    search.run(cells, 0);
    let (certificate, canonical_order) = search.best.unwrap();
    CanonicalForm {
        canonical_order,
        certificate,
        generators: search.generators,
    }
}

/// Orbit labels of vertex subsets (sizes 1 and 2) under the group generated
/// by `generators`; subsets in one orbit share a label.
pub fn subset_orbits(n: usize, generators: &[Vec<usize>], subsets: &[Vec<usize>]) -> Vec<usize> {
    let canon = |mut s: Vec<usize>| -> Vec<usize> {
        s.sort_unstable();
        s
    };
    let mut orbit_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut next = 0usize;
    let mut result = vec![usize::MAX; subsets.len()];
    for (i, s) in subsets.iter().enumerate() {
        let key = canon(s.clone());
        if let Some(&o) = orbit_of.get(&key) {
            result[i] = o;
            continue;
        }
        // closure of this subset under the group
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = vec![key.clone()];
        seen.insert(key);
        while let Some(cur) = queue.pop() {
            for g in generators {
                let img = canon(cur.iter().map(|&v| g[v]).collect());
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        for s in seen {
            orbit_of.insert(s, next);
        }
        result[i] = next;
        next += 1;
        let _ = n;
    }
    result
}

/// Encode a PGP as a coloured graph whose automorphisms are the PGP
/// automorphisms. Colours combine side, depth, a self-duality bit and a
/// marked bit; dual pairs get an extra (depth-preserving) edge.
pub fn encode(pgp: &Pgp, marked: &[Vertex]) -> (ColouredGraph, Vec<Vertex>) {
    let verts = pgp.vertices();
    let index: HashMap<Vertex, usize> = verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    let marked: HashSet<Vertex> = marked.iter().copied().collect();
    let mut colours = Vec::with_capacity(verts.len());
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for (i, &v) in verts.iter().enumerate() {
        let selfdual = pgp.is_self_dual(v) as u32;
        let m = marked.contains(&v) as u32;
        colours.push((((v.depth as u32 * 2 + v.side as u32) * 2) + selfdual) * 2 + m);
        for (w, mult) in pgp.neighbours(v) {
            assert!(mult == 1, "canonical encoding requires simply-laced graphs");
            let j = index[&w];
            if i < j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        let d = pgp.dual(v);
        if d != v {
            let j = index[&d];
            if i < j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    (ColouredGraph { colours, adj }, verts)
}

/// Isomorphism-class certificate of a PGP (working depth included).
pub fn pgp_certificate(pgp: &Pgp) -> Vec<u8> {
    let (cg, _) = encode(pgp, &[]);
    let cf = canonical_form(&cg);
    let mut out = Vec::with_capacity(cf.certificate.len() + 8);
    out.extend_from_slice(&(pgp.working_depth as u32).to_be_bytes());
    out.extend_from_slice(&(pgp.g[0].roots as u16).to_be_bytes());
    out.extend_from_slice(&(pgp.g[1].roots as u16).to_be_bytes());
    out.extend_from_slice(&cf.certificate);
    out
}

/// Automorphism generators of a PGP acting on `pgp.vertices()` indices.
pub fn pgp_automorphisms(pgp: &Pgp) -> (Vec<Vertex>, Vec<Vec<usize>>) {
    let (cg, verts) = encode(pgp, &[]);
    let cf = canonical_form(&cg);
    (verts, cf.generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_pgp, serialize_pgp, Mode};
    use crate::fixtures;

    fn path_graph(n: usize, colours: Vec<u32>) -> ColouredGraph {
        let mut adj = vec![Vec::new(); n];
        for i in 0..n - 1 {
            adj[i].push(i + 1);
            adj[i + 1].push(i);
        }
        ColouredGraph { colours, adj }
    }

    #[test]
    fn path_end_swap_same_certificate() {
        let g1 = path_graph(4, vec![0, 0, 0, 0]);
        let mut g2 = g1.clone();
        g2.adj = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        // relabel by reversing
        let g3 = ColouredGraph {
            colours: vec![0, 0, 0, 0],
            adj: vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
        };
        assert_eq!(canonical_form(&g1).certificate, canonical_form(&g3).certificate);
        // the end-swap is an automorphism: group is nontrivial
        let cf = canonical_form(&g1);
        assert!(!cf.generators.is_empty());
    }

    #[test]
    fn distinct_colouring_distinct_certificate() {
        let g1 = path_graph(3, vec![0, 0, 1]);
        let g2 = path_graph(3, vec![1, 0, 0]);
        let g3 = path_graph(3, vec![0, 1, 0]);
        assert_eq!(canonical_form(&g1).certificate, canonical_form(&g2).certificate);
        assert_ne!(canonical_form(&g1).certificate, canonical_form(&g3).certificate);
    }

    #[test]
    fn haagerup_automorphisms() {
        // the simultaneous tail swap is the unique nontrivial automorphism
        let h = parse_pgp(fixtures::HAAGERUP, Mode::Enumeration).unwrap();
        let (verts, gens) = pgp_automorphisms(&h);
        assert!(!gens.is_empty());
        let i6 = verts.iter().position(|&v| v == crate::graph::Vertex::new(0, 6, 0)).unwrap();
        let singles: Vec<Vec<usize>> = (0..verts.len()).map(|i| vec![i]).collect();
        let labels = subset_orbits(verts.len(), &gens, &singles);
        let orbit_size = labels.iter().filter(|&&l| l == labels[i6]).count();
        assert_eq!(orbit_size, 2);
        // and the depth-2 vertex is fixed
        let i2 = verts.iter().position(|&v| v == crate::graph::Vertex::new(0, 2, 0)).unwrap();
        assert_eq!(labels.iter().filter(|&&l| l == labels[i2]).count(), 1);
    }

    #[test]
    fn boxed_extensions_isomorphic() {
        let a = parse_pgp(fixtures::BOXED_EXT_A, Mode::Enumeration).unwrap();
        let b = parse_pgp(fixtures::BOXED_EXT_B, Mode::Enumeration).unwrap();
        assert_ne!(serialize_pgp(&a), serialize_pgp(&b));
        assert_eq!(pgp_certificate(&a), pgp_certificate(&b));
    }

    #[test]
    fn a0_matches_weed_f9() {
        let a0 = parse_pgp(fixtures::WEED_A0, Mode::Enumeration).unwrap();
        let f9 = parse_pgp(fixtures::WEEDS_10[8], Mode::Enumeration).unwrap();
        // align working depths before comparing isomorphism classes
        let md = a0.max_depth();
        let a = pgp_certificate(&a0.truncate(md));
        let f = f9.truncate(md);
        assert!(
            a == pgp_certificate(&f) || a == pgp_certificate(&f.swap_sides()),
            "A_(0) should be isomorphic to weed (f)(9) up to side order"
        );
    }

    #[test]
    fn symmetric_pair_automorphism() {
        // two interchangeable branch vertices at depth 2
        let p = parse_pgp("bwd1v1p1duals1v1x2,bwd1v1p1duals1v1x2", Mode::Enumeration).unwrap();
        let (_, gens) = pgp_automorphisms(&p);
        assert!(!gens.is_empty());
    }
}
