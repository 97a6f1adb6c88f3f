//! The six expansion posets of `x_w`: perfect matchings `P_w` of `G_w`,
//! perfect matchings of angles `A_w`, T-paths `T_w`, lattice paths `L_w`,
//! lattice paths of angles `B_w` and S-paths `S_w`, with weights, covering
//! relations and isomorphism witnesses between them.
//!
//! `P`, `A`, `T` expand `x_w` over `Delta_w`; `L`, `B`, `S` expand it over
//! the dual triangulation. Every poset carries one Laurent monomial weight per
//! element in the variables `x_1..x_{2n+3}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::cluster_engine::{Exponents, LaurentPolynomial};
use crate::core::Word;
use crate::poset::{self, FinitePoset, PosetError};
use crate::snakegraph::{GraphEdge, Side, SnakeGraph};
use crate::triangulation::LabeledTriangulation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("unknown expansion kind {0:?}")]
    UnknownKind(String),
    #[error("posets differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("no element with weight {0}")]
    MissingWeight(String),
    #[error("weights are not distinct")]
    RepeatedWeight,
    #[error("the weight bijection does not preserve covers")]
    IsomorphismFailure,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Which of the six expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExpansionKind {
    P,
    A,
    T,
    L,
    B,
    S,
}

impl ExpansionKind {
    pub const ALL: [ExpansionKind; 6] =
        [ExpansionKind::P, ExpansionKind::A, ExpansionKind::T, ExpansionKind::L, ExpansionKind::B, ExpansionKind::S];

    /// Whether this expansion of `x_w` lives on the dual side.
    pub fn is_dual_side(self) -> bool {
        matches!(self, ExpansionKind::L | ExpansionKind::B | ExpansionKind::S)
    }

    /// Partner under the duality `P <-> L`, `A <-> B`, `T <-> S`.
    pub fn partner(self) -> ExpansionKind {
        match self {
            ExpansionKind::P => ExpansionKind::L,
            ExpansionKind::A => ExpansionKind::B,
            ExpansionKind::T => ExpansionKind::S,
            ExpansionKind::L => ExpansionKind::P,
            ExpansionKind::B => ExpansionKind::A,
            ExpansionKind::S => ExpansionKind::T,
        }
    }
}

impl fmt::Display for ExpansionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            ExpansionKind::P => "P",
            ExpansionKind::A => "A",
            ExpansionKind::T => "T",
            ExpansionKind::L => "L",
            ExpansionKind::B => "B",
            ExpansionKind::S => "S",
        };
        f.write_str(c)
    }
}

impl FromStr for ExpansionKind {
    type Err = ExpansionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(ExpansionKind::P),
            "A" | "a" => Ok(ExpansionKind::A),
            "T" | "t" => Ok(ExpansionKind::T),
            "L" | "l" => Ok(ExpansionKind::L),
            "B" | "b" => Ok(ExpansionKind::B),
            "S" | "s" => Ok(ExpansionKind::S),
            _ => Err(ExpansionError::UnknownKind(s.to_string())),
        }
    }
}

fn monomial(nvars: usize, labels: impl IntoIterator<Item = (usize, i32)>) -> LaurentPolynomial {
    let mut e = vec![0; nvars];
    // label 0 marks an unlabeled edge and contributes nothing
    for (l, k) in labels.into_iter().filter(|&(l, _)| l > 0) {
        e[l - 1] += k;
    }
    LaurentPolynomial::monomial(e, BigInt::one())
}

/// Assemble a poset from payloads, weights and covers given as index pairs.
fn assemble(payloads: Vec<String>, weights: Vec<LaurentPolynomial>, covers: Vec<(usize, usize)>) -> FinitePoset {
    FinitePoset::from_covers(payloads, &covers).expect("twist relation is a cover relation").with_weights(weights)
}

/// `x_1 ... x_n` in `2n + 3` variables.
pub fn diagonal_product(n: usize) -> LaurentPolynomial {
    monomial(2 * n + 3, (1..=n).map(|l| (l, 1)))
}

// ---------------------------------------------------------------- P and L

fn edge_names(g: &SnakeGraph, edges: &[GraphEdge]) -> Vec<String> {
    let mut names = vec![String::new(); edges.len()];
    for (i, t) in g.tiles().iter().enumerate() {
        for s in Side::ALL {
            let k = g.edge_index(edges, i, s);
            if names[k].is_empty() {
                names[k] = format!("{}{:?}", t.diagonal, s);
            }
        }
    }
    names
}

fn nvars_of(g: &SnakeGraph) -> usize {
    let top = g.tiles().iter().flat_map(|t| t.labels).max().unwrap_or(0);
    (2 * g.num_tiles() + 3).max(top)
}

/// Perfect matchings of `g`, ordered by up-twists. A twist at tile `T_i`
/// swaps two opposite sides for the other two; it is an up-twist when it
/// turns horizontal into vertical for odd `i` and vertical into horizontal
/// for even `i`.
pub fn enumerate_p(g: &SnakeGraph) -> FinitePoset {
    let edges = g.edges();
    let names = edge_names(g, &edges);
    let matchings = g.perfect_matchings();
    let index: HashMap<&Vec<usize>, usize> = matchings.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let nv = nvars_of(g);
    let mut covers = Vec::new();
    for (i, m) in matchings.iter().enumerate() {
        let set: BTreeSet<usize> = m.iter().copied().collect();
        for (t, tile) in g.tiles().iter().enumerate() {
            let [s, w, n, e] = Side::ALL.map(|x| g.edge_index(&edges, t, x));
            let odd = tile.diagonal % 2 == 1;
            let (from, to) = if odd { ((s, n), (w, e)) } else { ((w, e), (s, n)) };
            if set.contains(&from.0) && set.contains(&from.1) {
                let mut next = set.clone();
                next.remove(&from.0);
                next.remove(&from.1);
                next.insert(to.0);
                next.insert(to.1);
                let next: Vec<usize> = next.into_iter().collect();
                if let Some(&j) = index.get(&next) {
                    covers.push((i, j));
                }
            }
        }
    }
    let payloads = matchings.iter().map(|m| m.iter().map(|&k| names[k].as_str()).collect::<Vec<_>>().join(" ")).collect();
    let weights = matchings.iter().map(|m| monomial(nv, m.iter().map(|&k| (edges[k].label, 1)))).collect();
    assemble(payloads, weights, covers)
}

/// Lattice paths on `g`, ordered by up-flips: a path through the S and E
/// sides of a tile moves to its W and N sides.
pub fn enumerate_l(g: &SnakeGraph) -> FinitePoset {
    let edges = g.edges();
    let names = edge_names(g, &edges);
    let paths = g.lattice_paths();
    let index: HashMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let nv = nvars_of(g);
    let mut covers = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for t in 0..g.num_tiles() {
            let [s, w, n, e] = Side::ALL.map(|x| g.edge_index(&edges, t, x));
            if let Some(k) = p.windows(2).position(|x| x == [s, e]) {
                let mut next = p.clone();
                next[k] = w;
                next[k + 1] = n;
                if let Some(&j) = index.get(&next) {
                    covers.push((i, j));
                }
            }
        }
    }
    let payloads = paths.iter().map(|p| p.iter().map(|&k| names[k].as_str()).collect::<Vec<_>>().join(" ")).collect();
    let weights = paths.iter().map(|p| monomial(nv, p.iter().map(|&k| (edges[k].label, 1)))).collect();
    assemble(payloads, weights, covers)
}

// ------------------------------------------------------- angle expansions

/// Sides of `gamma` and the quadrilateral around each diagonal.
struct Frame<'t> {
    t: &'t LabeledTriangulation,
    n: usize,
    /// `(l_i, r_i)` for `i = 1..=n` (index 0 unused)
    lr: Vec<(usize, usize)>,
}

impl<'t> Frame<'t> {
    fn new(t: &'t LabeledTriangulation) -> Self {
        let n = t.num_diagonals();
        let mut lr = vec![(0, 0)];
        for i in 1..=n {
            let (u, v) = t.ends(i);
            lr.push(if t.on_first_side(u) { (u, v) } else { (v, u) });
        }
        Frame { t, n, lr }
    }

    fn nvars(&self) -> usize {
        2 * self.n + 3
    }

    fn tri(&self, k: usize) -> [usize; 3] {
        self.t.triangles()[k].verts
    }

    fn opposite(&self, k: usize, v: usize) -> usize {
        self.t.triangles()[k].opposite_label(v).expect("vertex of triangle")
    }

    fn apex(&self, k: usize, i: usize) -> usize {
        let (l, r) = self.lr[i];
        *self.tri(k).iter().find(|&&x| x != l && x != r).expect("triangle on diagonal")
    }

    fn label(&self, p: usize, q: usize) -> usize {
        self.t.label_of(p, q).expect("edge of triangulation")
    }

    /// Sides `(u, d)` of `Delta_k` other than `delta_i`, adjacent to `l_i` and `r_i`.
    fn sides(&self, k: usize, i: usize) -> (usize, usize) {
        let (l, r) = self.lr[i];
        let s = self.apex(k, i);
        (self.label(l, s), self.label(r, s))
    }
}

fn angle_payload(angles: &[usize]) -> String {
    angles.iter().enumerate().map(|(k, v)| format!("{k}@{v}")).collect::<Vec<_>>().join(" ")
}

fn angle_weight(f: &Frame, angles: &[usize]) -> LaurentPolynomial {
    monomial(f.nvars(), angles.iter().enumerate().map(|(k, &v)| (f.opposite(k, v), 1)))
}

/// Angle selections indexed by triangle, with covers from a local move at
/// each diagonal that relocates the angles of `Delta_{i-1}` and `Delta_i`.
fn angle_poset(
    f: &Frame,
    sels: Vec<Vec<usize>>,
    up: impl Fn(&[usize], usize) -> Option<Vec<usize>>,
) -> FinitePoset {
    let index: HashMap<&Vec<usize>, usize> = sels.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut covers = Vec::new();
    for (i, s) in sels.iter().enumerate() {
        for d in 1..=f.n {
            if let Some(next) = up(s, d) {
                if let Some(&j) = index.get(&next) {
                    covers.push((i, j));
                }
            }
        }
    }
    let payloads = sels.iter().map(|s| angle_payload(s)).collect();
    let weights = sels.iter().map(|s| angle_weight(f, s)).collect();
    assemble(payloads, weights, covers)
}

/// Perfect matchings of angles: one angle per triangle, no two at the same
/// vertex, never at `a` or `b`. The up-twist at `delta_i` moves the angle of
/// `Delta_{i-1}` from `l_i` to `r_i` and that of `Delta_i` from `r_i` to `l_i`.
pub fn enumerate_a(t: &LabeledTriangulation) -> FinitePoset {
    let f = Frame::new(t);
    let (a, b) = t.endpoints();
    let mut sels = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; t.polygon_size()];
    fn rec(f: &Frame, k: usize, ab: (usize, usize), cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if k > f.n {
            out.push(cur.clone());
            return;
        }
        for v in f.tri(k) {
            if v != ab.0 && v != ab.1 && !used[v] {
                used[v] = true;
                cur.push(v);
                rec(f, k + 1, ab, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(&f, 0, (a, b), &mut cur, &mut used, &mut sels);
    sels.sort();
    angle_poset(&f, sels, |s, i| {
        let (l, r) = f.lr[i];
        (s[i - 1] == l && s[i] == r).then(|| {
            let mut next = s.to_vec();
            next[i - 1] = r;
            next[i] = l;
            next
        })
    })
}

/// Lattice paths of angles: one angle per triangle at a diagonal endpoint,
/// where every vertex other than `a`, `b` carries as many angles as it has
/// triangles, modulo 2. The up-flip at `delta_i` moves the two angles at
/// `l_i` to `r_i` for odd `i`, and from `r_i` to `l_i` for even `i`.
pub fn enumerate_b(t: &LabeledTriangulation) -> FinitePoset {
    let f = Frame::new(t);
    let (a, b) = t.endpoints();
    let size = t.polygon_size();
    let mut incident = vec![0usize; size];
    let mut last = vec![0usize; size];
    for k in 0..=f.n {
        for v in f.tri(k) {
            incident[v] += 1;
            last[v] = k;
        }
    }
    let endpoint: BTreeSet<usize> = (1..=f.n).flat_map(|i| [f.lr[i].0, f.lr[i].1]).collect();
    let mut sels = Vec::new();
    let mut cur = Vec::new();
    let mut count = vec![0usize; size];
    struct Ctx<'a> {
        f: &'a Frame<'a>,
        ab: (usize, usize),
        incident: Vec<usize>,
        last: Vec<usize>,
        endpoint: BTreeSet<usize>,
    }
    fn rec(c: &Ctx, k: usize, cur: &mut Vec<usize>, count: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k > c.f.n {
            out.push(cur.clone());
            return;
        }
        for v in c.f.tri(k) {
            if !c.endpoint.contains(&v) {
                continue;
            }
            count[v] += 1;
            cur.push(v);
            // every vertex whose triangles are all decided must satisfy parity
            let ok = c.f.tri(k).iter().all(|&u| {
                u == c.ab.0 || u == c.ab.1 || c.last[u] != k || count[u] % 2 == c.incident[u] % 2
            });
            if ok {
                rec(c, k + 1, cur, count, out);
            }
            cur.pop();
            count[v] -= 1;
        }
    }
    let ctx = Ctx { f: &f, ab: (a, b), incident, last, endpoint };
    rec(&ctx, 0, &mut cur, &mut count, &mut sels);
    sels.sort();
    angle_poset(&f, sels, |s, i| {
        let (l, r) = f.lr[i];
        let (from, to) = if i % 2 == 1 { (l, r) } else { (r, l) };
        (s[i - 1] == from && s[i] == from).then(|| {
            let mut next = s.to_vec();
            next[i - 1] = to;
            next[i] = to;
            next
        })
    })
}

// ------------------------------------------------------- T and S paths

fn adjacency(t: &LabeledTriangulation) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); t.polygon_size()];
    for (u, v, l) in t.edges() {
        adj[u].push((v, l));
        adj[v].push((u, l));
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    adj
}

/// T-paths from `a` to `b`: odd length, blue odd steps, red even steps on
/// diagonals in increasing order, all edges distinct. The weight is blue over
/// red. An up-twist at `delta_i` colors `d_{i-1}`, `u_i` red and `d_i`,
/// `u_{i-1}` blue, with opposite colors cancelling.
pub fn enumerate_t(t: &LabeledTriangulation) -> FinitePoset {
    let f = Frame::new(t);
    let (a, b) = t.endpoints();
    let adj = adjacency(t);
    let n = f.n;
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();
    struct St {
        path: Vec<(usize, usize)>,
        used: BTreeSet<usize>,
    }
    fn rec(adj: &[Vec<(usize, usize)>], n: usize, b: usize, v: usize, last_red: usize, st: &mut St, out: &mut Vec<Vec<(usize, usize)>>) {
        let len = st.path.len();
        if len % 2 == 1 && v == b {
            out.push(st.path.clone());
        }
        if len > 2 * n {
            return;
        }
        let red = len % 2 == 1;
        for &(u, l) in &adj[v] {
            if st.used.contains(&l) {
                continue;
            }
            if red && !(l <= n && l > last_red) {
                continue;
            }
            st.used.insert(l);
            st.path.push((u, l));
            rec(adj, n, b, u, if red { l } else { last_red }, st, out);
            st.path.pop();
            st.used.remove(&l);
        }
    }
    let mut st = St { path: Vec::new(), used: BTreeSet::new() };
    rec(&adj, n, b, a, 0, &mut st, &mut found);
    let nv = f.nvars();
    let vecs: Vec<Exponents> = found
        .iter()
        .map(|p| {
            let mut e = vec![0; nv];
            for (k, &(_, l)) in p.iter().enumerate() {
                e[l - 1] += if k % 2 == 0 { 1 } else { -1 };
            }
            e
        })
        .collect();
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&i, &j| vecs[i].cmp(&vecs[j]));
    let found: Vec<_> = order.iter().map(|&i| found[i].clone()).collect();
    let vecs: Vec<_> = order.iter().map(|&i| vecs[i].clone()).collect();
    let index: HashMap<&Exponents, usize> = vecs.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut covers = Vec::new();
    for (i, e) in vecs.iter().enumerate() {
        for d in 1..=n {
            let (u0, d0) = f.sides(d - 1, d);
            let (u1, d1) = f.sides(d, d);
            let mut next = e.clone();
            next[d0 - 1] -= 1;
            next[u1 - 1] -= 1;
            next[d1 - 1] += 1;
            next[u0 - 1] += 1;
            if let Some(&j) = index.get(&next) {
                covers.push((i, j));
            }
        }
    }
    let payloads = found
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(k, &(_, l))| format!("{}{}", if k % 2 == 0 { '+' } else { '-' }, l))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let weights = vecs.into_iter().map(|e| LaurentPolynomial::monomial(e, BigInt::one())).collect();
    assemble(payloads, weights, covers)
}

/// S-paths from `a` to `b`: `n + 1` edges meeting every triangle, repeats
/// allowed. A flip at `delta_i` replaces the two sides of `Q_i` at one end of
/// `delta_i` by the two at the other; the up-flip goes from `r_i` to `l_i`
/// for odd `i` and from `l_i` to `r_i` for even `i`.
pub fn enumerate_s(t: &LabeledTriangulation) -> FinitePoset {
    let f = Frame::new(t);
    let (a, b) = t.endpoints();
    let adj = adjacency(t);
    let n = f.n;
    let size = t.polygon_size();
    // edge distances to b prune walks that cannot finish in time
    let mut dist = vec![usize::MAX; size];
    dist[b] = 0;
    let mut queue = std::collections::VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in &adj[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    let tri_of_label: Vec<Vec<usize>> = (0..=2 * n + 3)
        .map(|l| (0..=n).filter(|&k| t.triangles()[k].has_label(l)).collect())
        .collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        adj: &[Vec<(usize, usize)>],
        dist: &[usize],
        tri_of_label: &[Vec<usize>],
        steps: usize,
        b: usize,
        walk: &mut Vec<usize>,
        hit: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *walk.last().unwrap();
        let done = walk.len() - 1;
        if done == steps {
            if v == b && hit.iter().all(|&h| h > 0) {
                out.push(walk.clone());
            }
            return;
        }
        let missing = hit.iter().filter(|&&h| h == 0).count();
        // each remaining edge meets at most two triangles
        if dist[v] > steps - done || missing > 2 * (steps - done) {
            return;
        }
        for &(u, l) in &adj[v] {
            if !tri_of_label[l].contains(&done) {
                continue;
            }
            for &k in &tri_of_label[l] {
                hit[k] += 1;
            }
            walk.push(u);
            rec(adj, dist, tri_of_label, steps, b, walk, hit, out);
            walk.pop();
            for &k in &tri_of_label[l] {
                hit[k] -= 1;
            }
        }
    }
    let mut walk = vec![a];
    let mut hit = vec![0usize; n + 1];
    rec(&adj, &dist, &tri_of_label, n + 1, b, &mut walk, &mut hit, &mut found);
    found.sort();
    let index: HashMap<&Vec<usize>, usize> = found.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut covers = Vec::new();
    for (i, s) in found.iter().enumerate() {
        for d in 1..=n {
            let (l, r) = f.lr[d];
            let ends = [f.apex(d - 1, d), f.apex(d, d)];
            let (from, to) = if d % 2 == 1 { (r, l) } else { (l, r) };
            for k in 1..s.len() - 1 {
                let around = [s[k - 1], s[k + 1]];
                let spans = around == ends || around == [ends[1], ends[0]];
                if s[k] == from && spans {
                    let mut next = s.clone();
                    next[k] = to;
                    if let Some(&j) = index.get(&next) {
                        covers.push((i, j));
                    }
                }
            }
        }
    }
    covers.sort_unstable();
    covers.dedup();
    let nv = f.nvars();
    let payloads = found.iter().map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-")).collect();
    let weights = found
        .iter()
        .map(|s| monomial(nv, s.windows(2).map(|e| (f.label(e[0], e[1]), 1))))
        .collect();
    assemble(payloads, weights, covers)
}

// ------------------------------------------------------- entry points

/// The expansion of the given kind for `x_w`: `P`, `A`, `T` over `Delta_w`
/// and `L`, `B`, `S` over the dual triangulation.
pub fn expansion(w: &Word, kind: ExpansionKind) -> FinitePoset {
    let t = LabeledTriangulation::from_word(w);
    expansion_of(&t, kind)
}

/// Same as [`expansion`] for an explicit triangulation.
pub fn expansion_of(t: &LabeledTriangulation, kind: ExpansionKind) -> FinitePoset {
    match kind {
        ExpansionKind::P => enumerate_p(&SnakeGraph::from_triangulation(t)),
        ExpansionKind::A => enumerate_a(t),
        ExpansionKind::T => enumerate_t(t),
        ExpansionKind::L => enumerate_l(&SnakeGraph::from_triangulation(&t.dual())),
        ExpansionKind::B => enumerate_b(&t.dual()),
        ExpansionKind::S => enumerate_s(&t.dual()),
    }
}

/// The expansion on the object attached to `w` itself (for example `L_w` on
/// `G_w` rather than on the dual snake graph).
pub fn own_expansion(w: &Word, kind: ExpansionKind) -> FinitePoset {
    let t = LabeledTriangulation::from_word(w);
    match kind {
        ExpansionKind::L => enumerate_l(&SnakeGraph::from_triangulation(&t)),
        ExpansionKind::B => enumerate_b(&t),
        ExpansionKind::S => enumerate_s(&t),
        k => expansion_of(&t, k),
    }
}

/// Weighted sum of an expansion normalised to `x_w`: divided by
/// `x_1 ... x_n` except for T-paths.
pub fn expansion_sum(p: &FinitePoset, kind: ExpansionKind, n: usize) -> LaurentPolynomial {
    let s = p.weight_sum().expect("weighted poset");
    if kind == ExpansionKind::T {
        s
    } else {
        s.div_exact(&diagonal_product(n)).expect("monomial division")
    }
}

/// Bijection `i -> j` matching `scale_p * w_p(i) = scale_q * w_q(j)`,
/// checked to be a poset isomorphism. Weights within an expansion are
/// distinct, so this is the unique weight-preserving bijection.
pub fn weight_isomorphism(
    p: &FinitePoset,
    scale_p: &LaurentPolynomial,
    q: &FinitePoset,
    scale_q: &LaurentPolynomial,
) -> Result<Vec<usize>, ExpansionError> {
    if p.len() != q.len() {
        return Err(ExpansionError::SizeMismatch(p.len(), q.len()));
    }
    let scaled = |x: &FinitePoset, s: &LaurentPolynomial, i: usize| s * x.weight(i).expect("weighted poset");
    let mut by_weight: BTreeMap<LaurentPolynomial, usize> = BTreeMap::new();
    for j in 0..q.len() {
        if by_weight.insert(scaled(q, scale_q, j), j).is_some() {
            return Err(ExpansionError::RepeatedWeight);
        }
    }
    let mut map = Vec::with_capacity(p.len());
    for i in 0..p.len() {
        let w = scaled(p, scale_p, i);
        match by_weight.get(&w) {
            Some(&j) => map.push(j),
            None => return Err(ExpansionError::MissingWeight(w.to_string())),
        }
    }
    let image: BTreeSet<(usize, usize)> = p.covers().iter().map(|&(x, y)| (map[x], map[y])).collect();
    let target: BTreeSet<(usize, usize)> = q.covers().iter().copied().collect();
    if image != target {
        return Err(ExpansionError::IsomorphismFailure);
    }
    Ok(map)
}

fn scale_for(kind: ExpansionKind, n: usize) -> LaurentPolynomial {
    if kind == ExpansionKind::T {
        diagonal_product(n)
    } else {
        LaurentPolynomial::one(2 * n + 3)
    }
}

/// Witness isomorphism between two of the six expansions of `x_w`, matching
/// nodes of equal weight (T-path weights times `x_1 ... x_n`).
pub fn iso_witness(w: &Word, from: ExpansionKind, to: ExpansionKind) -> Result<Vec<usize>, ExpansionError> {
    let n = w.len() + 1;
    let p = expansion(w, from);
    let q = expansion(w, to);
    weight_isomorphism(&p, &scale_for(from, n), &q, &scale_for(to, n))
}

/// `P_w -> A_w`.
pub fn p_to_a(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::P, ExpansionKind::A)
}

/// `A_w -> T_w`.
pub fn a_to_t(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::A, ExpansionKind::T)
}

/// `L_{w*} -> B_{w*}`.
pub fn l_to_b(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::L, ExpansionKind::B)
}

/// `B_{w*} -> S_{w*}`.
pub fn b_to_s(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::B, ExpansionKind::S)
}

/// `P_w -> L_{w*}`.
pub fn p_to_l_dual(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::P, ExpansionKind::L)
}

/// `A_w -> B_{w*}`.
pub fn a_to_b_dual(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::A, ExpansionKind::B)
}

/// `T_w -> S_{w*}`.
pub fn t_to_s_dual(w: &Word) -> Result<Vec<usize>, ExpansionError> {
    iso_witness(w, ExpansionKind::T, ExpansionKind::S)
}

/// Number of perfect matchings of `G_w` after deleting its first `k` tiles.
pub fn truncated_matching_count(w: &Word, k: usize) -> usize {
    SnakeGraph::from_word(w).drop_front(k).perfect_matchings().len()
}

/// Check that `p` is a distributive lattice isomorphic to the ideals of `c`.
pub fn is_ideal_lattice_of(p: &FinitePoset, c: &FinitePoset) -> Result<bool, ExpansionError> {
    Ok(p.is_distributive()? && poset::poset_isomorphic(p, &poset::order_ideals(c)?))
}
