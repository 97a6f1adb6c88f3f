//! Snake graphs `G_w`: the labeled unfolding of `Sigma_w`, dual snake
//! graphs, sign sequences and continued fractions, straight segments, the
//! snake-graph groupoid with its orbit posets, and lattice-path embeddings.
//!
//! Tile `T_1` has its SW corner at the origin; shape letter `a` glues the
//! next tile to the right and `b` glues it above.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::core::{ContinuedFraction, Letter, Word};
use crate::poset::{self, FinitePoset};
use crate::triangulation::LabeledTriangulation;

/// A unit edge of the plane given by its two endpoints.
type Segment = ((i32, i32), (i32, i32));

/// Side of a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    S,
    W,
    N,
    E,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::S, Side::W, Side::N, Side::E];

    fn idx(self) -> usize {
        match self {
            Side::S => 0,
            Side::W => 1,
            Side::N => 2,
            Side::E => 3,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Side::S | Side::N)
    }
}

/// A unit tile with SW anchor `(x, y)`, its diagonal label and the labels of
/// its four sides indexed `S, W, N, E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub x: i32,
    pub y: i32,
    pub diagonal: usize,
    pub labels: [usize; 4],
}

impl Tile {
    pub fn label(&self, s: Side) -> usize {
        self.labels[s.idx()]
    }

    /// Endpoints of a side as lattice points, ordered SW to NE.
    pub fn segment(&self, s: Side) -> ((i32, i32), (i32, i32)) {
        let (x, y) = (self.x, self.y);
        match s {
            Side::S => ((x, y), (x + 1, y)),
            Side::W => ((x, y), (x, y + 1)),
            Side::N => ((x, y + 1), (x + 1, y + 1)),
            Side::E => ((x + 1, y), (x + 1, y + 1)),
        }
    }
}

/// An edge of the snake graph between two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    pub from: (i32, i32),
    pub to: (i32, i32),
    pub label: usize,
    pub boundary: bool,
}

/// Snake graph given by its shape and per-tile labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeGraph {
    shape: Word,
    tiles: Vec<Tile>,
}

/// Sign of an edge under the diagonal-line rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

fn anchors(shape: &Word) -> Vec<(i32, i32)> {
    let mut out = vec![(0, 0)];
    let (mut x, mut y) = (0, 0);
    for l in shape.letters() {
        match l {
            Letter::A => x += 1,
            Letter::B => y += 1,
        }
        out.push((x, y));
    }
    out
}

impl SnakeGraph {
    /// Assemble from a shape and label quadruples `[S, W, N, E]` per tile.
    pub fn from_labels(shape: Word, labels: &[[usize; 4]]) -> Self {
        assert_eq!(shape.len() + 1, labels.len(), "one more tile than shape letters");
        let tiles = anchors(&shape)
            .into_iter()
            .zip(labels)
            .enumerate()
            .map(|(i, ((x, y), l))| Tile { x, y, diagonal: i + 1, labels: *l })
            .collect();
        SnakeGraph { shape, tiles }
    }

    /// Unlabeled snake graph of the given shape (all labels zero).
    pub fn of_shape(shape: &Word) -> Self {
        let labels = vec![[0; 4]; shape.len() + 1];
        Self::from_labels(shape.clone(), &labels)
    }

    /// `G_w`, obtained by unfolding the quadrilaterals of `Delta_w` tile by tile.
    pub fn from_word(w: &Word) -> Self {
        Self::from_triangulation(&LabeledTriangulation::from_word(w))
    }

    /// Snake graph of the arc `a -> b` in a labeled triangulation.
    pub fn from_triangulation(t: &LabeledTriangulation) -> Self {
        let n = t.num_diagonals();
        let tris = t.triangles();
        let apex = |i: usize| {
            let (u, v) = t.ends(i);
            *tris[i].verts.iter().find(|&&x| x != u && x != v).unwrap()
        };
        // corners [SW, SE, NE, NW] as polygon vertices
        let t0 = tris[0].verts;
        let mut corners = vec![[t0[0], t0[2], apex(1), t0[1]]];
        let mut shape = Vec::new();
        for i in 1..n {
            let [_, se, ne, nw] = corners[i - 1];
            let (u, v) = t.ends(i + 1);
            let next = if u == se || v == se {
                shape.push(Letter::B);
                [nw, ne, apex(i + 1), se]
            } else {
                shape.push(Letter::A);
                [se, nw, apex(i + 1), ne]
            };
            corners.push(next);
        }
        let label = |p: usize, q: usize| t.label_of(p, q).expect("tile side is an edge");
        let labels: Vec<[usize; 4]> = corners
            .iter()
            .map(|&[sw, se, ne, nw]| [label(sw, se), label(sw, nw), label(nw, ne), label(se, ne)])
            .collect();
        SnakeGraph::from_labels(Word::new(shape), &labels)
    }

    pub fn shape(&self) -> &Word {
        &self.shape
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn num_tiles(&self) -> usize {
        self.tiles.len()
    }

    /// Apply the reflections `T_1, ..., T_n` in order.
    pub fn dual(&self) -> SnakeGraph {
        let mut labels: Vec<[usize; 4]> = self.tiles.iter().map(|t| t.labels).collect();
        let mut shape: Vec<Letter> = self.shape.letters().to_vec();
        let n = labels.len();
        for i in 0..n {
            labels[i].swap(Side::N.idx(), Side::E.idx());
            for l in labels.iter_mut().skip(i + 1) {
                l.swap(Side::N.idx(), Side::E.idx());
                l.swap(Side::S.idx(), Side::W.idx());
            }
            for s in shape.iter_mut().skip(i) {
                *s = s.star();
            }
        }
        SnakeGraph::from_labels(Word::new(shape), &labels)
    }

    /// Subsnake graph after deleting the first `k` tiles.
    pub fn drop_front(&self, k: usize) -> SnakeGraph {
        if k >= self.num_tiles() {
            return SnakeGraph { shape: Word::empty(), tiles: Vec::new() };
        }
        let shape = Word::new(self.shape.letters()[k..].to_vec());
        let labels: Vec<[usize; 4]> = self.tiles[k..].iter().map(|t| t.labels).collect();
        let mut g = SnakeGraph::from_labels(shape, &labels);
        for (t, old) in g.tiles.iter_mut().zip(&self.tiles[k..]) {
            t.diagonal = old.diagonal;
        }
        g
    }

    /// Distinct edges, tile by tile in the order `S, W, N, E`.
    pub fn edges(&self) -> Vec<GraphEdge> {
        let mut seen: HashMap<Segment, usize> = HashMap::new();
        let mut out: Vec<GraphEdge> = Vec::new();
        for t in &self.tiles {
            for s in Side::ALL {
                let (from, to) = t.segment(s);
                match seen.get(&(from, to)) {
                    Some(&k) => out[k].boundary = false,
                    None => {
                        seen.insert((from, to), out.len());
                        out.push(GraphEdge { from, to, label: t.label(s), boundary: true });
                    }
                }
            }
        }
        out
    }

    /// Index into [`SnakeGraph::edges`] of a side of tile `i` (0-based).
    pub fn edge_index(&self, edges: &[GraphEdge], i: usize, s: Side) -> usize {
        let seg = self.tiles[i].segment(s);
        edges.iter().position(|e| (e.from, e.to) == seg).expect("tile side is an edge")
    }

    /// Perfect matchings as sorted lists of edge indices.
    pub fn perfect_matchings(&self) -> Vec<Vec<usize>> {
        let edges = self.edges();
        if self.tiles.is_empty() {
            return vec![Vec::new()];
        }
        let mut verts: Vec<(i32, i32)> = edges.iter().flat_map(|e| [e.from, e.to]).collect();
        verts.sort_unstable();
        verts.dedup();
        let vid: HashMap<(i32, i32), usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut incident = vec![Vec::new(); verts.len()];
        for (k, e) in edges.iter().enumerate() {
            incident[vid[&e.from]].push((k, vid[&e.to]));
            incident[vid[&e.to]].push((k, vid[&e.from]));
        }
        let mut out = Vec::new();
        let mut covered = vec![false; verts.len()];
        let mut chosen = Vec::new();
        fn rec(
            incident: &[Vec<(usize, usize)>],
            covered: &mut Vec<bool>,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let Some(v) = covered.iter().position(|c| !c) else {
                let mut m = chosen.clone();
                m.sort_unstable();
                out.push(m);
                return;
            };
            for &(e, u) in &incident[v] {
                if !covered[u] {
                    covered[v] = true;
                    covered[u] = true;
                    chosen.push(e);
                    rec(incident, covered, chosen, out);
                    chosen.pop();
                    covered[v] = false;
                    covered[u] = false;
                }
            }
        }
        rec(&incident, &mut covered, &mut chosen, &mut out);
        out.sort();
        out
    }

    /// Lattice paths from the SW corner of `T_1` to the NE corner of `T_n`,
    /// as ordered lists of edge indices.
    pub fn lattice_paths(&self) -> Vec<Vec<usize>> {
        let edges = self.edges();
        if self.tiles.is_empty() {
            return vec![Vec::new()];
        }
        let last = self.tiles.last().unwrap();
        let target = (last.x + 1, last.y + 1);
        let mut out_edges: HashMap<(i32, i32), Vec<usize>> = HashMap::new();
        for (k, e) in edges.iter().enumerate() {
            out_edges.entry(e.from).or_default().push(k);
        }
        let mut out = Vec::new();
        let mut stack = vec![((0, 0), Vec::new())];
        while let Some((p, path)) = stack.pop() {
            if p == target {
                out.push(path);
                continue;
            }
            for &k in out_edges.get(&p).map(|v| v.as_slice()).unwrap_or(&[]) {
                let mut next = path.clone();
                next.push(k);
                stack.push((edges[k].to, next));
            }
        }
        out.sort();
        out
    }

    /// Step word of a lattice path: `a` for an east step, `b` for a north step.
    pub fn path_word(&self, edges: &[GraphEdge], path: &[usize]) -> Word {
        Word::new(
            path.iter()
                .map(|&k| if edges[k].from.1 == edges[k].to.1 { Letter::A } else { Letter::B })
                .collect(),
        )
    }

    /// Lattice-point segments of `e_0, ..., e_n`.
    pub fn sign_edges(&self) -> Vec<((i32, i32), (i32, i32))> {
        let n = self.num_tiles();
        let mut out = vec![self.tiles[0].segment(Side::S)];
        for (i, l) in self.shape.letters().iter().enumerate() {
            out.push(match l {
                Letter::A => self.tiles[i].segment(Side::E),
                Letter::B => self.tiles[i].segment(Side::N),
            });
        }
        // a virtual tile below T_1 makes the last-three-tiles rule uniform
        let mut ext = vec![Letter::B];
        ext.extend_from_slice(self.shape.letters());
        let len = ext.len();
        let last = ext[len - 1];
        let straight = len >= 2 && ext[len - 2] == last;
        let side = match (last, straight) {
            _ if n == 1 => Side::N,
            (Letter::B, true) | (Letter::A, false) => Side::N,
            (Letter::A, true) | (Letter::B, false) => Side::E,
        };
        out.push(self.tiles[n - 1].segment(side));
        out
    }

    /// Sign sequence `(s(e_0), ..., s(e_n))` normalised to `s(e_0) = -`.
    pub fn sign_sequence(&self) -> Vec<Sign> {
        let parity = |(p, q): ((i32, i32), (i32, i32))| {
            // midpoint lies on y = x + j + 1/2
            let j = if p.1 == q.1 { p.1 - p.0 - 1 } else { p.1 - p.0 };
            j.rem_euclid(2)
        };
        let es = self.sign_edges();
        let base = parity(es[0]);
        es.into_iter().map(|e| if parity(e) == base { Sign::Minus } else { Sign::Plus }).collect()
    }

    /// Run-length encoding of the sign sequence.
    pub fn continued_fraction(&self) -> ContinuedFraction {
        ContinuedFraction::from_runs(&self.sign_sequence()).expect("nonempty sign sequence")
    }

    /// Segment lengths `[k_1, ..., k_d]`: end segments count all their tiles,
    /// middle segments one fewer.
    pub fn straight_segments(&self) -> Vec<usize> {
        straight_segments_of_shape(&self.shape)
    }

    /// JSON `{shape, tiles:[{x,y}], edges:[{from,to,label,boundary}]}`.
    pub fn to_json(&self) -> Value {
        let tiles: Vec<Value> = self
            .tiles
            .iter()
            .map(|t| {
                json!({"x": t.x, "y": t.y, "diagonal": t.diagonal,
                       "S": t.label(Side::S), "W": t.label(Side::W), "N": t.label(Side::N), "E": t.label(Side::E)})
            })
            .collect();
        let edges: Vec<Value> = self
            .edges()
            .iter()
            .map(|e| json!({"from": [e.from.0, e.from.1], "to": [e.to.0, e.to.1], "label": e.label, "boundary": e.boundary}))
            .collect();
        json!({"shape": self.shape.to_string(), "tiles": tiles, "edges": edges})
    }
}

/// Free-function form of [`SnakeGraph::from_word`].
pub fn snake_graph(w: &Word) -> SnakeGraph {
    SnakeGraph::from_word(w)
}

/// Free-function form of [`SnakeGraph::dual`].
pub fn dual_snake_graph(g: &SnakeGraph) -> SnakeGraph {
    g.dual()
}

/// Free-function form of [`SnakeGraph::sign_sequence`].
pub fn sign_sequence(g: &SnakeGraph) -> Vec<Sign> {
    g.sign_sequence()
}

/// Continued fraction `CF(w)` read from the sign sequence of `G_w`.
pub fn cf_from_snake(g: &SnakeGraph) -> ContinuedFraction {
    g.continued_fraction()
}

/// `CF(w)` for a word.
pub fn cf_of_word(w: &Word) -> ContinuedFraction {
    SnakeGraph::from_word(w).continued_fraction()
}

/// Segment lengths of the snake graph with the given shape.
pub fn straight_segments_of_shape(shape: &Word) -> Vec<usize> {
    let runs = shape.runs();
    let d = runs.len();
    if d == 0 {
        return vec![1];
    }
    runs.iter()
        .enumerate()
        .map(|(i, &(_, r))| if i == 0 || i == d - 1 { r + 1 } else { r })
        .collect()
}

/// Free-function form of [`SnakeGraph::straight_segments`].
pub fn straight_segments(g: &SnakeGraph) -> Vec<usize> {
    g.straight_segments()
}

/// Shapes reachable by one swap `ab <-> ba`.
pub fn groupoid_neighbors(shape: &Word) -> BTreeSet<Word> {
    let l = shape.letters();
    let mut out = BTreeSet::new();
    for i in 0..l.len().saturating_sub(1) {
        if l[i] != l[i + 1] {
            let mut v = l.to_vec();
            v.swap(i, i + 1);
            out.insert(Word::new(v));
        }
    }
    out
}

/// All shapes with `n` tiles and `j` letters `b`, in lexicographic order.
pub fn orbit_members(n: usize, j: usize) -> Vec<Word> {
    if n == 0 || j > n - 1 {
        return Vec::new();
    }
    Word::all_of_length(n - 1).into_iter().filter(|w| w.count(Letter::B) == j).collect()
}

/// Orbit `O_j^n`: shapes with `n` tiles and `j` letters `b`, where `y`
/// covers `x` when `y` comes from `x` by one swap `ab -> ba`.
pub fn orbit_poset(n: usize, j: usize) -> FinitePoset {
    let members = orbit_members(n, j);
    let index: BTreeMap<Word, usize> = members.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut covers = Vec::new();
    for (i, w) in members.iter().enumerate() {
        let l = w.letters();
        for k in 0..l.len().saturating_sub(1) {
            if l[k] == Letter::A && l[k + 1] == Letter::B {
                let mut v = l.to_vec();
                v.swap(k, k + 1);
                covers.push((i, index[&Word::new(v)]));
            }
        }
    }
    FinitePoset::from_covers(members.iter().map(|w| w.to_string()).collect(), &covers).expect("orbit poset")
}

/// Image of the lattice paths of a snake graph in the orbit poset with two
/// more tiles, with the bounds of the interval they form.
#[derive(Debug, Clone)]
pub struct LatticeEmbedding {
    pub tiles: usize,
    pub orbit_index: usize,
    pub images: BTreeSet<Word>,
    pub lo: Word,
    pub hi: Word,
}

impl LatticeEmbedding {
    /// Whether the images are exactly the interval `[lo, hi]` of the orbit
    /// poset and that interval is isomorphic to the lattice-path poset.
    pub fn is_interval_of(&self, orbit: &FinitePoset, lattice_paths: &FinitePoset) -> bool {
        let (Some(lo), Some(hi)) = (orbit.find(&self.lo.to_string()), orbit.find(&self.hi.to_string())) else {
            return false;
        };
        let interval = orbit.interval(lo, hi);
        let names: BTreeSet<String> = interval.payloads().iter().cloned().collect();
        let images: BTreeSet<String> = self.images.iter().map(|w| w.to_string()).collect();
        names == images && poset::poset_isomorphic(&interval, lattice_paths)
    }
}

/// Send each lattice path (east step to `a`, north step to `b`) to a shape
/// with two more tiles.
pub fn embed_lattice_paths(g: &SnakeGraph) -> LatticeEmbedding {
    let edges = g.edges();
    let images: BTreeSet<Word> = g.lattice_paths().iter().map(|p| g.path_word(&edges, p)).collect();
    // earlier north steps mean a higher path
    let height = |w: &&Word| -> Vec<bool> { w.letters().iter().map(|l| *l == Letter::B).collect() };
    let lo = images.iter().min_by_key(height).cloned().unwrap_or_else(Word::empty);
    let hi = images.iter().max_by_key(height).cloned().unwrap_or_else(Word::empty);
    LatticeEmbedding { tiles: g.num_tiles() + 2, orbit_index: g.shape().count(Letter::B) + 1, images, lo, hi }
}

/// Lattice-path poset of a snake graph ordered by up-flips, with paths as
/// step words.
pub fn lattice_path_word_poset(g: &SnakeGraph) -> FinitePoset {
    let edges = g.edges();
    let words: Vec<Word> = g.lattice_paths().iter().map(|p| g.path_word(&edges, p)).collect();
    let set: BTreeSet<Word> = words.iter().cloned().collect();
    let list: Vec<Word> = set.into_iter().collect();
    let index: BTreeMap<&Word, usize> = list.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut covers = Vec::new();
    for (i, w) in list.iter().enumerate() {
        let l = w.letters();
        for k in 0..l.len().saturating_sub(1) {
            if l[k] == Letter::A && l[k + 1] == Letter::B {
                let mut v = l.to_vec();
                v.swap(k, k + 1);
                if let Some(&j) = index.get(&Word::new(v)) {
                    covers.push((i, j));
                }
            }
        }
    }
    FinitePoset::from_covers(list.iter().map(|w| w.to_string()).collect(), &covers).expect("lattice path poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{dual_word, word};

    fn tile_labels(g: &SnakeGraph) -> Vec<[usize; 4]> {
        g.tiles().iter().map(|t| t.labels).collect()
    }

    #[test]
    fn g_ab_labels() {
        let g = snake_graph(&word("ab"));
        assert_eq!(g.shape(), &word("bb"));
        // [S, W, N, E]
        assert_eq!(tile_labels(&g), vec![[6, 7, 4, 2], [4, 1, 5, 3], [5, 2, 9, 8]]);
        let internal: Vec<usize> = g.edges().iter().filter(|e| !e.boundary).map(|e| e.label).collect();
        assert_eq!(internal, vec![4, 5]);
    }

    #[test]
    fn g_bb_labels_and_dual() {
        let g = snake_graph(&word("bb"));
        assert_eq!(g.shape(), &word("ab"));
        assert_eq!(tile_labels(&g), vec![[6, 7, 2, 4], [1, 4, 5, 3], [5, 2, 8, 9]]);
        assert_eq!(snake_graph(&word("ab")).dual(), g);
    }

    #[test]
    fn small_graphs() {
        assert_eq!(snake_graph(&word("")).num_tiles(), 1);
        let g = snake_graph(&word("ba"));
        assert_eq!(g.shape(), &word("aa"));
        assert_eq!(g.tiles()[2].x, 2);
        // the one-tile dual swaps the labels of N and E
        let one = snake_graph(&word(""));
        assert_eq!(one.dual().tiles()[0].labels, [2, 3, 5, 4]);
        let t = LabeledTriangulation::from_word(&word(""));
        assert_eq!(one.dual(), SnakeGraph::from_triangulation(&t.dual()));
    }

    #[test]
    fn shape_is_dual_word_and_dual_commutes() {
        for w in Word::all_up_to(8) {
            let g = snake_graph(&w);
            assert_eq!(g.shape(), &dual_word(&w), "{w}");
            let t = LabeledTriangulation::from_word(&w);
            assert_eq!(g.dual(), SnakeGraph::from_triangulation(&t.dual()), "{w}");
            assert_eq!(g.dual().dual(), g, "{w}");
            let internal: BTreeSet<usize> = g.edges().iter().filter(|e| !e.boundary).map(|e| e.label).collect();
            let n = g.num_tiles();
            assert_eq!(internal, (n + 1..n + n).collect(), "{w}");
        }
    }

    #[test]
    fn sign_sequences() {
        use Sign::*;
        assert_eq!(snake_graph(&word("ab")).sign_sequence(), vec![Minus, Plus, Minus, Plus]);
        assert_eq!(snake_graph(&word("bb")).sign_sequence(), vec![Minus, Minus, Minus, Minus]);
        assert_eq!(cf_of_word(&word("ab")).entries(), &[1, 1, 1, 1]);
        assert_eq!(cf_of_word(&word("bb")).entries(), &[4]);
        assert_eq!(cf_of_word(&word("")).entries(), &[1, 1]);
    }

    #[test]
    fn two_tile_sign_conventions() {
        // shape b continues straight from the virtual tile, shape a turns
        assert_eq!(cf_of_word(&word("a")).entries(), &[1, 1, 1]);
        assert_eq!(cf_of_word(&word("b")).entries(), &[3]);
    }

    #[test]
    fn end_edge_conventions() {
        // last three tiles straight: e_n across from e_{n-1}
        let g = SnakeGraph::of_shape(&word("aa"));
        assert_eq!(*g.sign_edges().last().unwrap(), g.tiles()[2].segment(Side::E));
        let g = SnakeGraph::of_shape(&word("bb"));
        assert_eq!(*g.sign_edges().last().unwrap(), g.tiles()[2].segment(Side::N));
        // zigzag: adjacent
        let g = SnakeGraph::of_shape(&word("ab"));
        assert_eq!(*g.sign_edges().last().unwrap(), g.tiles()[2].segment(Side::E));
        let g = SnakeGraph::of_shape(&word("ba"));
        assert_eq!(*g.sign_edges().last().unwrap(), g.tiles()[2].segment(Side::N));
        // one tile: e_1 across from e_0
        let g = SnakeGraph::of_shape(&word(""));
        assert_eq!(g.sign_edges()[1], g.tiles()[0].segment(Side::N));
    }

    #[test]
    fn sign_duality() {
        for w in Word::all_up_to(8).into_iter().filter(|w| !w.is_empty()) {
            let s = snake_graph(&w).sign_sequence();
            let flipped: Vec<Sign> = s.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { x.flip() } else { x }).collect();
            assert_eq!(flipped, snake_graph(&dual_word(&w)).sign_sequence(), "{w}");
        }
    }

    #[test]
    fn segments() {
        assert_eq!(straight_segments_of_shape(&word("aabaa")), vec![3, 1, 3]);
        assert_eq!(straight_segments_of_shape(&word("aaaa")), vec![5]);
        assert_eq!(straight_segments_of_shape(&word("")), vec![1]);
        assert_eq!(straight_segments_of_shape(&word("aabbbb")), vec![3, 5]);
    }

    #[test]
    fn orbit_posets() {
        let o = orbit_poset(5, 2);
        assert_eq!(o.len(), 6);
        assert_eq!(o.payload(o.bottom().unwrap()), "aabb");
        assert_eq!(o.payload(o.top().unwrap()), "bbaa");
        assert_eq!(orbit_poset(5, 0).len(), 1);
        assert!(poset::poset_isomorphic(&orbit_poset(7, 3), &poset::grid_lattice(3, 3)));
        assert_eq!(groupoid_neighbors(&word("aab")), [word("aba")].into_iter().collect());
        assert!(groupoid_neighbors(&word("aaaa")).is_empty());
    }

    #[test]
    fn embedding_of_g_ab() {
        let g = snake_graph(&word("ab"));
        let e = embed_lattice_paths(&g);
        assert_eq!(e.images.len(), 4);
        let orbit = orbit_poset(e.tiles, e.orbit_index);
        assert!(e.is_interval_of(&orbit, &lattice_path_word_poset(&g)));
    }

    #[test]
    fn single_tile_embedding_is_whole_orbit() {
        let g = snake_graph(&word(""));
        let e = embed_lattice_paths(&g);
        let orbit = orbit_poset(e.tiles, e.orbit_index);
        assert_eq!(orbit.len(), 2);
        assert_eq!(e.images.len(), 2);
        assert!(e.is_interval_of(&orbit, &lattice_path_word_poset(&g)));
    }

    #[test]
    fn o14_embeddings_cover_o26() {
        let mut union = BTreeSet::new();
        for s in orbit_members(4, 1) {
            union.extend(embed_lattice_paths(&SnakeGraph::of_shape(&s)).images);
        }
        assert_eq!(union.len(), orbit_poset(6, 2).len());
    }

    #[test]
    fn json_dump() {
        let j = snake_graph(&word("ab")).to_json();
        assert_eq!(j["shape"], "bb");
        assert_eq!(j["tiles"].as_array().unwrap().len(), 3);
        assert_eq!(j["edges"].as_array().unwrap().len(), 10);
    }
}
