//! The l = 2 machinery: graphs in which every edge lies in a triangle,
//! stored through their complement edge lists, and the starter/deletion
//! constructions that realize every size in the base interval.

use crate::antichain::FlatAntichain;
use crate::counting::{binomial, overlap_slack};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::lift::lift_add_isolated;
use crate::mask::SubsetMask;

/// A graph on [n] stored as the edge list of its complement. Starters keep
/// the complement a forest; deletion sequences may add further complement
/// edges at vertex n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementGraph {
    n: u32,
    comp_edges: Vec<(u32, u32)>,
}

/// Edge, triangle and complement-line-graph counts of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TGraphStats {
    pub edges: u64,
    pub triangles: u64,
    pub comp_line_edges: u64,
    pub comp_triangles: u64,
}

impl ComplementGraph {
    pub fn new(n: u32, comp_edges: Vec<(u32, u32)>) -> Result<Self> {
        if !(3..=64).contains(&n) {
            return Err(Error::GroundSize(n));
        }
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(comp_edges.len());
        for (a, b) in comp_edges {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::GroundSize(n));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(ComplementGraph { n, comp_edges: edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn comp_edges(&self) -> &[(u32, u32)] {
        &self.comp_edges
    }

    pub fn comp_edge_count(&self) -> u64 {
        self.comp_edges.len() as u64
    }

    fn comp_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize + 1];
        for &(a, b) in &self.comp_edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    /// Number of adjacent edge pairs in the complement: the line-graph edge
    /// count, sum of binomial(deg, 2) over vertices.
    pub fn comp_line_edges(&self) -> u64 {
        self.comp_degrees()
            .iter()
            .map(|&d| binomial(d, 2))
            .sum()
    }

    pub fn comp_triangles(&self) -> u64 {
        let adj = self.comp_adjacency();
        let mut count = 0u64;
        for &(a, b) in &self.comp_edges {
            let common = adj[a as usize] & adj[b as usize];
            count += common.count_ones() as u64;
        }
        count / 3
    }

    /// True when the complement is acyclic.
    pub fn comp_is_forest(&self) -> bool {
        let mut parent: Vec<u32> = (0..=self.n).collect();
        fn find(parent: &mut [u32], mut v: u32) -> u32 {
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for &(a, b) in &self.comp_edges {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra == rb {
                return false;
            }
            parent[ra as usize] = rb;
        }
        true
    }

    /// A starter: the complement is a forest with ceil((n-2)/2) edges.
    pub fn is_starter(&self) -> bool {
        self.comp_edge_count() == starter_edge_count(self.n) && self.comp_is_forest()
    }

    fn comp_adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n as usize + 1];
        for &(a, b) in &self.comp_edges {
            adj[a as usize] |= 1u64 << (b - 1);
            adj[b as usize] |= 1u64 << (a - 1);
        }
        adj
    }

    /// Antichain size the graph would induce, by inclusion-exclusion over
    /// complement edges: binomial(n,3) - (n-3) e + e(L) - t(complement).
    /// Equals t(G) + e(complement) for every graph.
    pub fn phi(&self) -> u64 {
        let n = self.n;
        let value = binomial(n, 3) as i128 - (n as i128 - 3) * self.comp_edge_count() as i128
            + self.comp_line_edges() as i128
            - self.comp_triangles() as i128;
        debug_assert!(value >= 0);
        value as u64
    }

    /// Triangle count of the graph itself, via the same inclusion-exclusion.
    pub fn triangle_count(&self) -> u64 {
        self.phi() - self.comp_edge_count()
    }

    pub fn stats(&self) -> TGraphStats {
        TGraphStats {
            edges: binomial(self.n, 2) - self.comp_edge_count(),
            triangles: self.triangle_count(),
            comp_line_edges: self.comp_line_edges(),
            comp_triangles: self.comp_triangles(),
        }
    }

    /// Triangles become the 3-sets and complement edges the 2-sets. Fails
    /// with the offending edge when some graph edge lies in no triangle.
    pub fn to_antichain(&self) -> Result<FlatAntichain> {
        let n = self.n;
        let comp: std::collections::HashSet<(u32, u32)> = self.comp_edges.iter().copied().collect();
        let mut adj = vec![0u64; n as usize + 1];
        for p in 1..=n {
            for q in p + 1..=n {
                if !comp.contains(&(p, q)) {
                    adj[p as usize] |= 1u64 << (q - 1);
                    adj[q as usize] |= 1u64 << (p - 1);
                }
            }
        }
        // Every edge of the graph must lie in at least one triangle.
        for p in 1..=n {
            for q in p + 1..=n {
                if !comp.contains(&(p, q)) && adj[p as usize] & adj[q as usize] == 0 {
                    return Err(Error::NotTGraph(p, q));
                }
            }
        }
        let mut triangles = Vec::new();
        for p in 1..=n {
            for q in p + 1..=n {
                if comp.contains(&(p, q)) {
                    continue;
                }
                // Common neighbors above q close a triangle counted once.
                let mut common = adj[p as usize] & adj[q as usize] & !((1u64 << q) - 1);
                while common != 0 {
                    let low = common & common.wrapping_neg();
                    triangles.push(SubsetMask((1u64 << (p - 1)) | (1u64 << (q - 1)) | low));
                    common ^= low;
                }
            }
        }
        let upper = Family::new(n, 3, triangles)?;
        let lower = Family::new(
            n,
            2,
            self.comp_edges
                .iter()
                .map(|&(a, b)| SubsetMask((1u64 << (a - 1)) | (1u64 << (b - 1))))
                .collect(),
        )?;
        Ok(FlatAntichain::from_parts_unchecked(n, 2, upper, lower))
    }
}

/// Complement edge count every n-starter must have.
pub fn starter_edge_count(n: u32) -> u64 {
    (n as u64).saturating_sub(2).div_ceil(2)
}

/// Constructive lower bound on the largest i such that starters exist for
/// every line-graph edge count up to i.
pub fn starter_index_bound(n: u32) -> u64 {
    match n {
        3 | 4 => 0,
        5 | 6 => 1,
        7 | 8 => 3,
        9 | 10 => 4,
        11 | 12 => 7,
        n if n % 2 == 1 => n as u64 - 2,
        n => n as u64 - 3,
    }
}

/// The starter whose complement is the matching {n-j, j}.
pub fn matching_starter(n: u32) -> ComplementGraph {
    let m = starter_edge_count(n) as u32;
    let comp_edges = (1..=m).map(|j| (j, n - j)).collect();
    ComplementGraph::new(n, comp_edges).expect("matching starter is well formed")
}

/// Extends a starter by 2t fresh vertices, joining its highest-labelled
/// complement leaf to the first t of them; the complement line graph gains
/// binomial(t+1, 2) edges.
fn extend_starter(g: &ComplementGraph, t: u32) -> ComplementGraph {
    let deg = g.comp_degrees();
    let leaf = (1..=g.n())
        .rev()
        .find(|&v| deg[v as usize] == 1)
        .expect("starter complement has a leaf");
    let mut comp_edges = g.comp_edges().to_vec();
    for k in 1..=t {
        comp_edges.push((leaf, g.n() + k));
    }
    ComplementGraph::new(g.n() + 2 * t, comp_edges).expect("extension is well formed")
}

fn starter_rec(n: u32, i: u64) -> ComplementGraph {
    if n.is_multiple_of(2) {
        // Even ground sets reuse the odd catalog plus one isolated vertex.
        let g = starter_rec(n - 1, i);
        return ComplementGraph::new(n, g.comp_edges().to_vec()).unwrap();
    }
    match (n, i) {
        (3, 0) => ComplementGraph::new(3, vec![(1, 2)]).unwrap(),
        (_, 0) => matching_starter(n),
        (5, 1) => extend_starter(&starter_rec(3, 0), 1),
        (7, 1..=2) => extend_starter(&starter_rec(5, i - 1), 1),
        (7, 3) => ComplementGraph::new(7, vec![(1, 2), (1, 3), (1, 4)]).unwrap(),
        (9, 1..=4) => extend_starter(&starter_rec(7, i - 1), 1),
        (11, 1..=2) => extend_starter(&starter_rec(9, i - 1), 1),
        (11, 3..=6) => extend_starter(&starter_rec(7, i - 3), 2),
        (11, 7) => {
            // Tree with degree sequence 4,2,1,1,1,1 plus isolated vertices.
            ComplementGraph::new(11, vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]).unwrap()
        }
        (13, 1..=5) => extend_starter(&starter_rec(11, i - 1), 1),
        (13, 6..=9) => extend_starter(&starter_rec(7, i - 6), 3),
        (13, 10..=11) => extend_starter(&starter_rec(5, i - 10), 4),
        (15, 1..=9) => extend_starter(&starter_rec(13, i - 1), 1),
        (15, 10..=13) => extend_starter(&starter_rec(7, i - 10), 4),
        (17, 1..=9) => extend_starter(&starter_rec(15, i - 1), 1),
        (17, 10..=14) => extend_starter(&starter_rec(9, i - 10), 4),
        (17, 15) => extend_starter(&starter_rec(7, 0), 5),
        (_, 1..=5) => extend_starter(&starter_rec(n - 2, i - 1), 1),
        _ => extend_starter(&starter_rec(n - 6, i - 6), 3),
    }
}

/// A starter with exactly `i` adjacent complement-edge pairs.
pub fn build_starter(n: u32, i: u64) -> Result<ComplementGraph> {
    let max = starter_index_bound(n);
    if n < 6 {
        return Err(Error::GroundSize(n));
    }
    if i > max {
        return Err(Error::StarterIndexOutOfRange { n, i, max });
    }
    let g = starter_rec(n, i);
    debug_assert!(g.is_starter());
    debug_assert_eq!(g.comp_line_edges(), i);
    Ok(g)
}

/// Relabels a starter so vertex n is isolated in the complement and each
/// vertex n-j has degree 1 once all higher-labelled vertices are removed:
/// the complement edges become {n-j, b_j} with b_j < n-j.
///
/// Peels a leaf edge of the remaining forest at each step, always taking the
/// leaf with the highest current label; leftover vertices keep their
/// relative order in the low labels. A graph already in proper form is
/// returned unchanged.
pub fn properly_label(g: &ComplementGraph) -> ComplementGraph {
    let n = g.n();
    debug_assert!(g.comp_is_forest());
    let m = g.comp_edges().len();
    let mut deg = g.comp_degrees();
    let mut new_label = vec![0u32; n as usize + 1];

    let iso = (1..=n)
        .rev()
        .find(|&v| deg[v as usize] == 0)
        .expect("a starter complement has an isolated vertex");
    new_label[iso as usize] = n;

    let mut remaining: Vec<(u32, u32)> = g.comp_edges().to_vec();
    for j in 1..=m as u32 {
        let (idx, leaf) = remaining
            .iter()
            .enumerate()
            .flat_map(|(idx, &(a, b))| [(idx, a), (idx, b)])
            .filter(|&(_, v)| deg[v as usize] == 1)
            .max_by_key(|&(_, v)| v)
            .expect("forest has a leaf edge");
        new_label[leaf as usize] = n - j;
        let (a, b) = remaining.swap_remove(idx);
        deg[a as usize] -= 1;
        deg[b as usize] -= 1;
    }

    let mut next = 1u32;
    for v in 1..=n {
        if new_label[v as usize] == 0 {
            new_label[v as usize] = next;
            next += 1;
        }
    }
    let comp_edges = g
        .comp_edges()
        .iter()
        .map(|&(a, b)| (new_label[a as usize], new_label[b as usize]))
        .collect();
    ComplementGraph::new(n, comp_edges).unwrap()
}

/// Size drop when the j-th edge at vertex n is deleted from a properly
/// labelled starter.
pub fn deletion_step(n: u32, j: u32) -> u64 {
    if j as u64 <= starter_edge_count(n) {
        (n - j - 3) as u64
    } else {
        (n - j - 2) as u64
    }
}

/// Deletes the graph edges {n,n-1}, ..., {n,n-t} from a properly labelled
/// starter; every intermediate graph keeps the triangle-cover property.
pub fn deletion_sequence(g0: &ComplementGraph, t: u32) -> Result<ComplementGraph> {
    let n = g0.n();
    if t > n - 3 {
        return Err(Error::TooManyDeletions { n, t });
    }
    let mut comp_edges = g0.comp_edges().to_vec();
    for j in 1..=t {
        comp_edges.push((n - j, n));
    }
    ComplementGraph::new(n, comp_edges)
}

/// Smallest antichain size reachable from starters before deletions.
fn starter_floor(n: u32) -> u64 {
    binomial(n, 3) - (n as u64 - 3) * starter_edge_count(n)
}

/// Interval covered by starters plus deletion sequences.
pub fn top_row_range(n: u32) -> (u64, u64) {
    let lo = binomial(n, 3) - binomial(n - 2, 2) - (n as u64 - 4) * starter_edge_count(n);
    (lo, starter_floor(n) + starter_index_bound(n))
}

/// Builds a verified-shape maximal antichain of exact size m from a starter
/// and a deletion prefix: the smallest t bringing the floor below m, then
/// the starter index making up the difference.
pub fn top_row_construct(n: u32, m: u64) -> Result<FlatAntichain> {
    if n < 6 {
        return Err(Error::GroundSize(n));
    }
    let (lo, hi) = top_row_range(n);
    if m < lo || m > hi {
        return Err(Error::OutOfTopRow { n, m, lo, hi });
    }
    let m0 = starter_floor(n);
    let mut t = 0u32;
    let mut dropped = 0u64;
    while m0 - dropped > m {
        t += 1;
        dropped += deletion_step(n, t);
    }
    let i = m + dropped - m0;
    if i > starter_index_bound(n) {
        // The one size the generic route misses: n = 10, m = m0 - 1.
        debug_assert_eq!((n, m), (10, 91));
        let g = ComplementGraph::new(10, vec![(10, 9), (1, 2), (1, 3), (1, 4), (1, 5)])?;
        return g.to_antichain();
    }
    let starter = properly_label(&build_starter(n, i)?);
    let graph = deletion_sequence(&starter, t)?;
    debug_assert_eq!(graph.phi(), m);
    graph.to_antichain()
}

/// Inclusive size interval the base construction covers on levels (2,3).
pub fn base_interval(n: u32) -> (u64, u64) {
    (
        binomial(n, 2) - 6,
        binomial(n, 3) - (n as u64 - 3) * starter_edge_count(n) + overlap_slack(n - 2),
    )
}

/// Realizes every size in the base interval: top-row sizes directly, lower
/// sizes through the isolated-vertex recursion, and the single size below
/// the n = 6 top row by an explicit four-triple antichain.
pub fn base_case_construct(n: u32, m: u64) -> Result<FlatAntichain> {
    if n < 6 {
        return Err(Error::GroundSize(n));
    }
    let (lo, hi) = base_interval(n);
    if m < lo || m > hi {
        return Err(Error::OutOfBaseInterval { n, m, lo, hi });
    }
    if n == 6 && m == 9 {
        let f = Family::new(
            6,
            3,
            [[1, 2, 5], [1, 2, 6], [3, 4, 5], [3, 4, 6]]
                .iter()
                .map(|s| SubsetMask::from_elements(s, 6).unwrap())
                .collect(),
        )?;
        return crate::antichain::assemble_from_upper(6, 2, f);
    }
    let (top_lo, _) = top_row_range(n);
    if m >= top_lo {
        top_row_construct(n, m)
    } else {
        let smaller = base_case_construct(n - 1, m - (n as u64 - 1))?;
        lift_add_isolated(&smaller)
    }
}
