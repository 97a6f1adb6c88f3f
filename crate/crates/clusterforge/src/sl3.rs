//! Cluster algebras from 3-triangulations of a polygon: the flip oracle,
//! T-path expansions of directed edges and faces from the fan triangulation,
//! their covering posets and a structural validator for diagrams.
//!
//! Vertices of the polygon are `0..size` in counterclockwise order and the fan
//! triangulation has all diagonals at vertex 0. Every edge `{i, j}` carries two
//! directed variables `x_{i->j}` and `x_{j->i}` (the one near `i` first) and
//! every triangle carries one face variable. Boundary edge variables are frozen.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::cluster_engine::{hat_y, ClusterError, Exponents, LaurentPolynomial, Quiver, Seed};
use crate::poset::{chain, FinitePoset, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl3Error {
    #[error("a polygon needs at least 4 vertices, got {0}")]
    PolygonTooSmall(usize),
    #[error("({0}, {1}) is a boundary edge and cannot be flipped")]
    FrozenEdge(usize, usize),
    #[error("({0}, {1}) is not a diagonal of the current triangulation")]
    NotADiagonal(usize, usize),
    #[error("({0}, {1}) is not an arc between distinct vertices of the polygon")]
    InvalidArc(usize, usize),
    #[error("({0}, {1}, {2}) is not a triangle on distinct vertices of the polygon")]
    InvalidFace(usize, usize, usize),
    #[error("the triangulation is not the fan at vertex 0")]
    NotFan,
    #[error("quiver after the flip does not match any 3-triangulation labeling")]
    LabelMismatch,
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A node of the 3-triangulation quiver: a directed edge or a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// `Edge(i, j)` is `x_{i->j}`.
    Edge(usize, usize),
    /// Face with sorted vertices.
    Face([usize; 3]),
}

impl Element {
    pub fn face(a: usize, b: usize, c: usize) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Element::Face(t)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Edge(i, j) => write!(f, "x[{i}>{j}]"),
            Element::Face([a, b, c]) => write!(f, "x[{a},{b},{c}]"),
        }
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn is_boundary(size: usize, a: usize, b: usize) -> bool {
    let (a, b) = sorted_pair(a, b);
    b == a + 1 || (a == 0 && b == size - 1)
}

/// Arrows of the 3-triangulation quiver on the given labels. Arrows along an
/// edge cancel between neighbouring triangles or join two frozen nodes, so
/// only the arrows through each face are kept.
fn quiver_arrows(triangles: &[[usize; 3]], slot: &HashMap<Element, usize>) -> Vec<(usize, usize)> {
    let mut arrows = Vec::new();
    for t in triangles {
        let f = slot[&Element::Face(*t)];
        for c in 0..3 {
            let v = t[c];
            let next = t[(c + 1) % 3];
            let prev = t[(c + 2) % 3];
            let out = slot[&Element::Edge(v, next)];
            let inn = slot[&Element::Edge(v, prev)];
            arrows.push((f, out));
            arrows.push((out, inn));
            arrows.push((inn, f));
        }
    }
    arrows
}

/// Seed of a 3-triangulated polygon with node labels that follow flips.
#[derive(Clone, Debug)]
pub struct FanSL3Seed {
    size: usize,
    triangles: Vec<[usize; 3]>,
    labels: Vec<Element>,
    initial_labels: Vec<Element>,
    seed: Seed,
}

/// Seed of the fan triangulation of a polygon with `size` vertices.
pub fn build_fan_sl3_seed(size: usize) -> Result<FanSL3Seed, Sl3Error> {
    FanSL3Seed::fan(size)
}

impl FanSL3Seed {
    pub fn fan(size: usize) -> Result<Self, Sl3Error> {
        if size < 4 {
            return Err(Sl3Error::PolygonTooSmall(size));
        }
        let triangles: Vec<[usize; 3]> = (1..size - 1).map(|j| [0, j, j + 1]).collect();
        let mut labels = Vec::new();
        for j in 2..size - 1 {
            labels.push(Element::Edge(0, j));
            labels.push(Element::Edge(j, 0));
        }
        labels.extend(triangles.iter().map(|t| Element::Face(*t)));
        let n_mutable = labels.len();
        for a in 0..size {
            let b = (a + 1) % size;
            labels.push(Element::Edge(a, b));
            labels.push(Element::Edge(b, a));
        }
        let slot: HashMap<Element, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let quiver = Quiver::from_arrows(labels.len(), n_mutable, &quiver_arrows(&triangles, &slot));
        Ok(FanSL3Seed { size, triangles, initial_labels: labels.clone(), labels, seed: Seed::initial(quiver) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of diagonals of the triangulation.
    pub fn num_diagonals(&self) -> usize {
        self.size - 3
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn quiver(&self) -> &Quiver {
        &self.seed.quiver
    }

    /// Current label of every node.
    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    /// Labels of the initial fan seed, indexing the variables.
    pub fn initial_labels(&self) -> &[Element] {
        &self.initial_labels
    }

    /// Display names of the initial variables.
    pub fn variable_names(&self) -> Vec<String> {
        self.initial_labels.iter().map(|e| e.to_string()).collect()
    }

    pub fn is_fan(&self) -> bool {
        let mut t = self.triangles.clone();
        t.sort_unstable();
        t == (1..self.size - 1).map(|j| [0, j, j + 1]).collect::<Vec<_>>()
    }

    /// Index of the node currently labeled `e`.
    pub fn slot(&self, e: Element) -> Option<usize> {
        self.labels.iter().position(|&l| l == e)
    }

    /// Cluster variable currently attached to `e`, in the initial variables.
    pub fn variable(&self, e: Element) -> Option<&LaurentPolynomial> {
        self.slot(e).map(|s| &self.seed.attachments[s])
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        is_boundary(self.size, a, b) || self.labels.contains(&Element::Edge(a, b))
    }

    /// Flip the diagonal `{a, b}`: mutate its two edge nodes, then the two
    /// faces on either side, and relabel by matching the resulting quiver.
    pub fn flip(&self, a: usize, b: usize) -> Result<FanSL3Seed, Sl3Error> {
        if a >= self.size || b >= self.size || a == b {
            return Err(Sl3Error::InvalidArc(a, b));
        }
        if is_boundary(self.size, a, b) {
            return Err(Sl3Error::FrozenEdge(a, b));
        }
        let sides: Vec<[usize; 3]> =
            self.triangles.iter().copied().filter(|t| t.contains(&a) && t.contains(&b)).collect();
        if sides.len() != 2 {
            return Err(Sl3Error::NotADiagonal(a, b));
        }
        let apex = |t: &[usize; 3]| *t.iter().find(|&&v| v != a && v != b).expect("apex");
        let (c, d) = (apex(&sides[0]), apex(&sides[1]));
        let old = [Element::Edge(a, b), Element::Edge(b, a), Element::Face(sides[0]), Element::Face(sides[1])];
        let slots: Vec<usize> = old.iter().map(|&e| self.slot(e).expect("label present")).collect();
        let seed = self.seed.mutate_sequence(&slots)?;

        let mut triangles: Vec<[usize; 3]> = self.triangles.iter().copied().filter(|t| !sides.contains(t)).collect();
        let new_faces = [Element::face(c, d, a), Element::face(c, d, b)];
        for f in new_faces {
            if let Element::Face(t) = f {
                triangles.push(t);
            }
        }
        let fresh = [Element::Edge(c, d), Element::Edge(d, c), new_faces[0], new_faces[1]];
        let actual: BTreeSet<(usize, usize, u32)> = arrow_counts(&seed.quiver);
        for perm in permutations4() {
            let mut labels = self.labels.clone();
            for (p, &s) in perm.iter().zip(&slots) {
                labels[s] = fresh[*p];
            }
            let slot: HashMap<Element, usize> = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let q = Quiver::from_arrows(labels.len(), seed.quiver.num_mutable(), &quiver_arrows(&triangles, &slot));
            if arrow_counts(&q) == actual {
                return Ok(FanSL3Seed {
                    size: self.size,
                    triangles,
                    labels,
                    initial_labels: self.initial_labels.clone(),
                    seed,
                });
            }
        }
        Err(Sl3Error::LabelMismatch)
    }

    /// Flip diagonals crossing `{i, j}` until it is an edge. Each flip replaces
    /// the first diagonal crossed from `i` by a diagonal at `i`.
    fn make_edge(&self, i: usize, j: usize) -> Result<FanSL3Seed, Sl3Error> {
        let mut s = self.clone();
        while !s.has_edge(i, j) {
            let first = s
                .triangles
                .iter()
                .filter(|t| t.contains(&i))
                .find_map(|t| {
                    let o: Vec<usize> = t.iter().copied().filter(|&v| v != i).collect();
                    arcs_cross(s.size, (o[0], o[1]), (i, j)).then(|| (o[0], o[1]))
                })
                .expect("a triangle at i meets the arc");
            s = s.flip(first.0, first.1)?;
        }
        Ok(s)
    }

    /// Cluster variable of a directed edge, reached by flips from this seed.
    pub fn edge_variable(&self, i: usize, j: usize) -> Result<LaurentPolynomial, Sl3Error> {
        if i >= self.size || j >= self.size || i == j {
            return Err(Sl3Error::InvalidArc(i, j));
        }
        let s = self.make_edge(i, j)?;
        Ok(s.variable(Element::Edge(i, j)).expect("edge present").clone())
    }

    /// Cluster variable of a face, reached by flips from this seed.
    pub fn face_variable(&self, a: usize, b: usize, c: usize) -> Result<LaurentPolynomial, Sl3Error> {
        if [a, b, c].iter().any(|&v| v >= self.size) || a == b || b == c || a == c {
            return Err(Sl3Error::InvalidFace(a, b, c));
        }
        let s = self.make_edge(a, b)?.make_edge(b, c)?.make_edge(a, c)?;
        Ok(s.variable(Element::face(a, b, c)).expect("face present").clone())
    }
}

fn arrow_counts(q: &Quiver) -> BTreeSet<(usize, usize, u32)> {
    q.arrows().into_iter().map(|(i, j)| (i, j, q.count(i, j))).collect()
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// `v` lies strictly inside the counterclockwise arc from `a` to `b`.
fn strictly_between(size: usize, a: usize, v: usize, b: usize) -> bool {
    let d = |x: usize| (x + size - a) % size;
    d(v) > 0 && d(v) < d(b)
}

/// Two arcs between polygon vertices cross in their interiors.
pub fn arcs_cross(size: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    strictly_between(size, a, c, b) != strictly_between(size, a, d, b)
}

/// The directed arc `i -> j` crosses the face `t`: either it starts at a
/// vertex of `t` and ends strictly between the other two, or it meets none of
/// the vertices and separates them.
pub fn arc_crosses_face(size: usize, (i, j): (usize, usize), t: [usize; 3]) -> bool {
    if t.contains(&i) {
        if t.contains(&j) {
            return false;
        }
        let o: Vec<usize> = t.iter().copied().filter(|&v| v != i).collect();
        return arcs_cross(size, (o[0], o[1]), (i, j));
    }
    if t.contains(&j) {
        return false;
    }
    let side: Vec<bool> = t.iter().map(|&v| strictly_between(size, i, v, j)).collect();
    side.iter().any(|&s| s) && side.iter().any(|&s| !s)
}

/// Two faces cross when their interiors meet, that is when no side of one
/// separates it from the other.
pub fn faces_cross(size: usize, s: [usize; 3], t: [usize; 3]) -> bool {
    if s == t {
        return false;
    }
    let separated = |p: [usize; 3], q: [usize; 3]| {
        (0..3).any(|k| {
            let (a, b) = (p[k], p[(k + 1) % 3]);
            let other = p[(k + 2) % 3];
            let inside = strictly_between(size, a, other, b);
            q.iter().all(|&v| v == a || v == b || strictly_between(size, a, v, b) != inside)
        })
    };
    !separated(s, t) && !separated(t, s)
}

/// Signed multiset of elements: positive multiplicities are blue, negative
/// multiplicities red. Opposite colors cancel on insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SL3Diagram {
    elements: BTreeMap<Element, i32>,
}

impl SL3Diagram {
    pub fn unit(e: Element) -> Self {
        let mut d = SL3Diagram::default();
        d.add(e, 1);
        d
    }

    pub fn from_signed(items: &[(Element, i32)]) -> Self {
        let mut d = SL3Diagram::default();
        for &(e, m) in items {
            d.add(e, m);
        }
        d
    }

    pub fn add(&mut self, e: Element, m: i32) {
        let v = self.elements.entry(e).or_insert(0);
        *v += m;
        if *v == 0 {
            self.elements.remove(&e);
        }
    }

    /// Superimpose two diagrams.
    pub fn combine(&self, other: &SL3Diagram) -> SL3Diagram {
        let mut d = self.clone();
        for (&e, &m) in &other.elements {
            d.add(e, m);
        }
        d
    }

    pub fn elements(&self) -> &BTreeMap<Element, i32> {
        &self.elements
    }

    /// Number of elements counted with multiplicity.
    pub fn len(&self) -> usize {
        self.elements.values().map(|m| m.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn blue(&self) -> impl Iterator<Item = (Element, i32)> + '_ {
        self.elements.iter().filter(|(_, &m)| m > 0).map(|(&e, &m)| (e, m))
    }

    pub fn red(&self) -> impl Iterator<Item = (Element, i32)> + '_ {
        self.elements.iter().filter(|(_, &m)| m < 0).map(|(&e, &m)| (e, -m))
    }

    /// Exponent vector in the initial variables of `seed`.
    pub fn exponents(&self, seed: &FanSL3Seed) -> Exponents {
        let mut e = vec![0; seed.initial_labels.len()];
        for (el, &m) in &self.elements {
            let i = seed.initial_labels.iter().position(|l| l == el).expect("element of the initial triangulation");
            e[i] += m;
        }
        e
    }

    pub fn weight(&self, seed: &FanSL3Seed) -> LaurentPolynomial {
        LaurentPolynomial::monomial(self.exponents(seed), 1.into())
    }

    pub fn to_json(&self, seed: &FanSL3Seed) -> Value {
        let color = |m: i32| if m > 0 { "blue" } else { "red" };
        let edges: Vec<Value> = self
            .elements
            .iter()
            .filter_map(|(e, &m)| match e {
                Element::Edge(i, j) => Some(json!({"from": i, "to": j, "color": color(m), "mult": m.abs()})),
                Element::Face(_) => None,
            })
            .collect();
        let faces: Vec<Value> = self
            .elements
            .iter()
            .filter_map(|(e, &m)| match e {
                Element::Face(t) => Some(json!({"tri": t, "color": color(m), "mult": m.abs()})),
                Element::Edge(..) => None,
            })
            .collect();
        json!({
            "edges": edges,
            "faces": faces,
            "weight": self.weight(seed).display_with(&seed.variable_names()),
        })
    }
}

impl fmt::Display for SL3Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|(e, &m)| {
                let sign = if m > 0 { "+" } else { "-" };
                if m.abs() == 1 {
                    format!("{sign}{e}")
                } else {
                    format!("{sign}{}{e}", m.abs())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// What a diagram expands: a directed edge or a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Edge(usize, usize),
    Face([usize; 3]),
}

/// Recursive enumeration of T-paths from the fan triangulation. A directed
/// edge `i -> j` not in the fan resolves through the first diagonal `0 - m`
/// it crosses (with `m` next to `i`):
/// `T_ij = (ik - lk) T_lj + (il - kl) T_kj + (ik + li - ikl - lk) T_jkl
/// + (il + ki - ikl - kl) T_jkl` with `k = m`, `l = 0`. A face `ijk` not in
/// the fan resolves as `(T_ikl T_ij + T_ijl T_ik) - il`, where `i = 0` and
/// `l` splits the face when it contains the fan vertex, and otherwise `i` is
/// the middle vertex and `l = 0`.
struct Enumerator {
    size: usize,
    memo: HashMap<Target, Vec<SL3Diagram>>,
}

fn prefixed(prefix: &SL3Diagram, rest: &[SL3Diagram], out: &mut Vec<SL3Diagram>) {
    out.extend(rest.iter().map(|d| prefix.combine(d)));
}

impl Enumerator {
    fn in_fan_edge(&self, i: usize, j: usize) -> bool {
        is_boundary(self.size, i, j) || i == 0 || j == 0
    }

    fn edge(&mut self, i: usize, j: usize) -> Vec<SL3Diagram> {
        if self.in_fan_edge(i, j) {
            return vec![SL3Diagram::unit(Element::Edge(i, j))];
        }
        if let Some(v) = self.memo.get(&Target::Edge(i, j)) {
            return v.clone();
        }
        let k = if j > i { i + 1 } else { i - 1 };
        let l = 0;
        let e = Element::Edge;
        let ikl = Element::face(i, k, l);
        let t_lj = self.edge(l, j);
        let t_kj = self.edge(k, j);
        let t_jkl = self.face(j, k, l);
        let mut out = Vec::new();
        prefixed(&SL3Diagram::from_signed(&[(e(i, k), 1), (e(l, k), -1)]), &t_lj, &mut out);
        prefixed(&SL3Diagram::from_signed(&[(e(i, l), 1), (e(k, l), -1)]), &t_kj, &mut out);
        let p3 = [(e(i, k), 1), (e(l, i), 1), (ikl, -1), (e(l, k), -1)];
        prefixed(&SL3Diagram::from_signed(&p3), &t_jkl, &mut out);
        let p4 = [(e(i, l), 1), (e(k, i), 1), (ikl, -1), (e(k, l), -1)];
        prefixed(&SL3Diagram::from_signed(&p4), &t_jkl, &mut out);
        self.memo.insert(Target::Edge(i, j), out.clone());
        out
    }

    fn face(&mut self, a: usize, b: usize, c: usize) -> Vec<SL3Diagram> {
        let el = Element::face(a, b, c);
        let Element::Face([a, b, c]) = el else { unreachable!() };
        if a == 0 && c == b + 1 {
            return vec![SL3Diagram::unit(el)];
        }
        if let Some(v) = self.memo.get(&Target::Face([a, b, c])) {
            return v.clone();
        }
        let (i, j, k, l) = if a == 0 { (0, b, c, b + 1) } else { (b, a, c, 0) };
        let t_ikl = self.face(i, k, l);
        let t_ij = self.edge(i, j);
        let t_ijl = self.face(i, j, l);
        let t_ik = self.edge(i, k);
        let red = SL3Diagram::from_signed(&[(Element::Edge(i, l), -1)]);
        let mut out = Vec::new();
        for x in &t_ikl {
            for y in &t_ij {
                out.push(red.combine(x).combine(y));
            }
        }
        for x in &t_ijl {
            for y in &t_ik {
                out.push(red.combine(x).combine(y));
            }
        }
        self.memo.insert(Target::Face([a, b, c]), out.clone());
        out
    }
}

fn require_fan(seed: &FanSL3Seed) -> Result<(), Sl3Error> {
    if seed.is_fan() {
        Ok(())
    } else {
        Err(Sl3Error::NotFan)
    }
}

/// T-paths of the directed edge `i -> j` with respect to the fan.
pub fn enumerate_edge_tpaths(seed: &FanSL3Seed, i: usize, j: usize) -> Result<Vec<SL3Diagram>, Sl3Error> {
    require_fan(seed)?;
    if i >= seed.size || j >= seed.size || i == j {
        return Err(Sl3Error::InvalidArc(i, j));
    }
    Ok(Enumerator { size: seed.size, memo: HashMap::new() }.edge(i, j))
}

/// T-paths of the face `abc` with respect to the fan.
pub fn enumerate_face_tpaths(seed: &FanSL3Seed, a: usize, b: usize, c: usize) -> Result<Vec<SL3Diagram>, Sl3Error> {
    require_fan(seed)?;
    if [a, b, c].iter().any(|&v| v >= seed.size) || a == b || b == c || a == c {
        return Err(Sl3Error::InvalidFace(a, b, c));
    }
    Ok(Enumerator { size: seed.size, memo: HashMap::new() }.face(a, b, c))
}

/// Sum of the weights of a list of diagrams.
pub fn expansion_of(seed: &FanSL3Seed, diagrams: &[SL3Diagram]) -> LaurentPolynomial {
    let nv = seed.initial_labels.len();
    diagrams.iter().fold(LaurentPolynomial::zero(nv), |acc, d| &acc + &d.weight(seed))
}

/// Poset on distinct diagrams where `d < d'` is generated by
/// `weight(d') = weight(d) * y-hat_k` for a mutable node `k` of the fan quiver.
pub fn sl3_poset(seed: &FanSL3Seed, diagrams: &[SL3Diagram]) -> Result<FinitePoset, Sl3Error> {
    require_fan(seed)?;
    let distinct: Vec<SL3Diagram> = diagrams.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let exps: Vec<Exponents> = distinct.iter().map(|d| d.exponents(seed)).collect();
    let index: HashMap<&Exponents, usize> = exps.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let q = seed.quiver();
    let hats: Vec<Exponents> = (0..q.num_mutable()).map(|k| hat_y(q, k)).collect();
    let mut pairs = Vec::new();
    for (a, e) in exps.iter().enumerate() {
        for h in &hats {
            let up: Exponents = e.iter().zip(h).map(|(x, y)| x + y).collect();
            if let Some(&b) = index.get(&up) {
                pairs.push((a, b));
            }
        }
    }
    let payloads = distinct.iter().map(|d| d.to_string()).collect();
    let weights = distinct.iter().map(|d| d.weight(seed)).collect();
    Ok(FinitePoset::from_generating_pairs(payloads, &pairs)?.with_weights(weights))
}

/// Poset of T-paths of the longest edge `1 -> size-1`.
pub fn longest_edge_poset(size: usize) -> Result<FinitePoset, Sl3Error> {
    let seed = build_fan_sl3_seed(size)?;
    let ds = enumerate_edge_tpaths(&seed, 1, size - 1)?;
    sl3_poset(&seed, &ds)
}

/// Poset of T-paths of the face `0, 1, size-1` at the fan vertex.
pub fn fan_face_poset(size: usize) -> Result<FinitePoset, Sl3Error> {
    let seed = build_fan_sl3_seed(size)?;
    let ds = enumerate_face_tpaths(&seed, 0, 1, size - 1)?;
    sl3_poset(&seed, &ds)
}

/// Lattice points weakly above the x-axis and weakly below the path
/// `(a b b)^n` from the origin (`a` a unit step right, `b` a unit step up),
/// ordered by single unit steps right or up inside the region.
pub fn lattice_region_poset(n: usize) -> FinitePoset {
    let pts: Vec<(usize, usize)> = (0..=n).flat_map(|x| (0..=2 * x).map(move |y| (x, y))).collect();
    let index: HashMap<(usize, usize), usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, &(x, y)) in pts.iter().enumerate() {
        for nb in [(x + 1, y), (x, y + 1)] {
            if let Some(&j) = index.get(&nb) {
                covers.push((i, j));
            }
        }
    }
    let payloads = pts.iter().map(|(x, y)| format!("({x},{y})")).collect();
    FinitePoset::from_generating_pairs(payloads, &covers).expect("grid region is acyclic")
}

/// Chain with `n + 1` elements, the expected shape of the fan-face poset.
pub fn fan_face_model(n: usize) -> FinitePoset {
    chain(n + 1)
}

/// Structural check that a diagram is the image of an alternating fork-join
/// network for `target` over the fan. Verified properties: every element
/// belongs to the fan triangulation; the boundary at polygon vertices is
/// `j - i` for an edge `i -> j` and `i + j + k` for a face, with a face element
/// acting as a tripod onto its three vertices; no element of an edge diagram
/// repeats and its length is odd; every red element crosses the target.
/// On failure the error names the first violated property.
pub fn verify_fork_join(seed: &FanSL3Seed, target: Target, diagram: &SL3Diagram) -> Result<(), String> {
    let n = seed.size;
    for e in diagram.elements.keys() {
        if !seed.initial_labels.contains(e) {
            return Err(format!("{e} is not an element of the triangulation"));
        }
    }
    let mut boundary = vec![0i64; n];
    for (e, &m) in &diagram.elements {
        let m = m as i64;
        match *e {
            Element::Edge(u, v) => {
                boundary[v] += m;
                boundary[u] -= m;
            }
            Element::Face(t) => {
                for v in t {
                    boundary[v] += m;
                }
            }
        }
    }
    let mut expected = vec![0i64; n];
    match target {
        Target::Edge(i, j) => {
            expected[j] += 1;
            expected[i] -= 1;
        }
        Target::Face(t) => {
            for v in t {
                expected[v] += 1;
            }
        }
    }
    if boundary != expected {
        return Err(format!("boundary {boundary:?} differs from {expected:?}"));
    }
    if let Target::Edge(..) = target {
        if let Some((e, _)) = diagram.elements.iter().find(|(_, &m)| m.abs() > 1) {
            return Err(format!("{e} is used more than once"));
        }
        if diagram.len().is_multiple_of(2) {
            return Err(format!("even number of elements ({})", diagram.len()));
        }
    }
    for (e, _) in diagram.red() {
        let crosses = match (target, e) {
            (Target::Edge(i, j), Element::Edge(u, v)) => arcs_cross(n, (u, v), (i, j)),
            (Target::Edge(i, j), Element::Face(t)) => arc_crosses_face(n, (i, j), t),
            (Target::Face(s), Element::Edge(u, v)) => arc_crosses_face(n, (u, v), s),
            (Target::Face(s), Element::Face(t)) => faces_cross(n, s, t),
        };
        if !crosses {
            return Err(format!("red {e} does not cross the target"));
        }
    }
    Ok(())
}
