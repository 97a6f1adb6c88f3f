//! Finite posets with payloads and weights: order ideals, lattice and
//! distributivity checks, grading, isomorphism, named families and export.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::cluster_engine::{default_names, LaurentPolynomial};
use crate::core::{Letter, QPolynomial, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation contains a cycle")]
    Cyclic,
    #[error("cover ({0}, {1}) is implied by other covers")]
    ImpliedCover(usize, usize),
    #[error("element {0} is out of range")]
    NoSuchElement(usize),
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("poset has {0} elements, more than the supported 64")]
    TooLarge(usize),
}

/// Fixed-size bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or_with(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A finite poset stored as the transitive reduction of its order.
///
/// Element `i` carries a string payload and an optional Laurent weight.
/// `covers` holds pairs `(x, y)` meaning `y` covers `x`.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    payloads: Vec<String>,
    weights: Vec<Option<LaurentPolynomial>>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<Bits>,
    below: Vec<Bits>,
}

impl FinitePoset {
    /// Build from a cover list, rejecting cycles and implied covers.
    pub fn from_covers(payloads: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = payloads.len();
        let mut cs: Vec<(usize, usize)> = covers.to_vec();
        cs.sort_unstable();
        cs.dedup();
        for &(x, y) in &cs {
            if x >= n {
                return Err(PosetError::NoSuchElement(x));
            }
            if y >= n {
                return Err(PosetError::NoSuchElement(y));
            }
            if x == y {
                return Err(PosetError::Cyclic);
            }
        }
        let p = Self::assemble(payloads, cs)?;
        for &(x, y) in &p.covers {
            let implied = p.up[x].iter().any(|&z| z != y && p.above[z].get(y));
            if implied {
                return Err(PosetError::ImpliedCover(x, y));
            }
        }
        Ok(p)
    }

    /// Build from a strict order relation `less(i, j)`, keeping only covers.
    pub fn from_relation(payloads: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let n = payloads.len();
        let mut rel = vec![Bits::new(n); n];
        for (i, row) in rel.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && less(i, j) {
                    row.set(j);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in rel[i].ones() {
                if !rel[i].ones().any(|k| k != j && rel[k].get(j)) {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(payloads, &covers)
    }

    /// Build from an arbitrary relation list by taking its transitive reduction.
    pub fn from_generating_pairs(payloads: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut cs: Vec<(usize, usize)> = pairs.to_vec();
        cs.sort_unstable();
        cs.dedup();
        let p = Self::assemble(payloads.clone(), cs)?;
        Self::from_relation(payloads, |i, j| i != j && p.above[i].get(j))
    }

    fn assemble(payloads: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let n = payloads.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(x, y) in &covers {
            up[x].push(y);
            down[y].push(x);
            indeg[y] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::Cyclic);
        }
        let mut above = vec![Bits::new(n); n];
        for &x in order.iter().rev() {
            let mut b = Bits::new(n);
            b.set(x);
            for &y in &up[x] {
                b.or_with(&above[y]);
            }
            above[x] = b;
        }
        let mut below = vec![Bits::new(n); n];
        for &x in &order {
            let mut b = Bits::new(n);
            b.set(x);
            for &y in &down[x] {
                b.or_with(&below[y]);
            }
            below[x] = b;
        }
        Ok(FinitePoset { payloads, weights: vec![None; n], covers, up, down, above, below })
    }

    /// Attach one weight per element.
    pub fn with_weights(mut self, weights: Vec<LaurentPolynomial>) -> Self {
        assert_eq!(weights.len(), self.len());
        self.weights = weights.into_iter().map(Some).collect();
        self
    }

    pub fn len(&self) -> usize {
        self.payloads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payloads.is_empty()
    }

    pub fn payload(&self, i: usize) -> &str {
        &self.payloads[i]
    }

    pub fn payloads(&self) -> &[String] {
        &self.payloads
    }

    pub fn weight(&self, i: usize) -> Option<&LaurentPolynomial> {
        self.weights[i].as_ref()
    }

    /// Sum of all weights, or `None` if some element is unweighted.
    pub fn weight_sum(&self) -> Option<LaurentPolynomial> {
        let mut it = self.weights.iter();
        let first = it.next()?.clone()?;
        it.try_fold(first, |acc, w| w.as_ref().map(|w| &acc + w))
    }

    /// Index of the element with the given payload.
    pub fn find(&self, payload: &str) -> Option<usize> {
        self.payloads.iter().position(|p| p == payload)
    }

    /// Sorted cover pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(&y)
    }

    /// `x <= y` in the order.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].get(y)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// The unique minimum, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// The unique maximum, if there is one.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// Length of the longest chain from a minimal element to each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut h = vec![0usize; n];
        for x in self.topological_order() {
            for &y in &self.up[x] {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    /// Length of the longest chain from each element to a maximal element.
    pub fn depths(&self) -> Vec<usize> {
        let n = self.len();
        let mut d = vec![0usize; n];
        for x in self.topological_order().into_iter().rev() {
            for &y in &self.up[x] {
                d[x] = d[x].max(d[y] + 1);
            }
        }
        d
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.below[i].count());
        idx
    }

    /// Rank function when every maximal chain has the same length.
    pub fn rank(&self) -> Option<Vec<usize>> {
        let h = self.heights();
        if self.covers.iter().any(|&(x, y)| h[y] != h[x] + 1) {
            return None;
        }
        let tops = self.maximal_elements();
        if let Some(&t) = tops.first() {
            if tops.iter().any(|&m| h[m] != h[t]) {
                return None;
            }
        }
        Some(h)
    }

    pub fn is_graded(&self) -> bool {
        self.rank().is_some()
    }

    /// Coefficient `j` counts the elements of rank `j`.
    pub fn rank_generating_function(&self) -> Result<QPolynomial, PosetError> {
        let r = self.rank().ok_or(PosetError::NotGraded)?;
        let top = r.iter().copied().max().unwrap_or(0);
        let mut c = vec![0i64; if self.is_empty() { 0 } else { top + 1 }];
        for k in r {
            c[k] += 1;
        }
        Ok(QPolynomial::from_coeffs(c))
    }

    fn join_of(&self, x: usize, y: usize) -> Option<usize> {
        let ub = self.above[x].and(&self.above[y]);
        let found = ub.ones().find(|&z| ub.is_subset(&self.above[z]));
        found
    }

    fn meet_of(&self, x: usize, y: usize) -> Option<usize> {
        let lb = self.below[x].and(&self.below[y]);
        let found = lb.ones().find(|&z| lb.is_subset(&self.below[z]));
        found
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join_of(x, y)
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet_of(x, y)
    }

    pub fn is_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.join_of(x, y).is_some() && self.meet_of(x, y).is_some()))
    }

    /// Induced subposet on the join-irreducible elements (exactly one lower cover).
    pub fn join_irreducibles(&self) -> Result<FinitePoset, PosetError> {
        if !self.is_lattice() {
            return Err(PosetError::NotALattice);
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.down[i].len() == 1).collect();
        Ok(self.induced(&keep))
    }

    /// Whether the lattice is isomorphic to the ideals of its join-irreducibles.
    pub fn is_distributive(&self) -> Result<bool, PosetError> {
        let j = self.join_irreducibles()?;
        let ideals = order_ideals(&j)?;
        Ok(poset_isomorphic(self, &ideals))
    }

    /// Direct check of `x ^ (y v z) = (x ^ y) v (x ^ z)` for all triples.
    pub fn satisfies_distributive_law(&self) -> Result<bool, PosetError> {
        let n = self.len();
        let mut join = vec![vec![0usize; n]; n];
        let mut meet = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                join[x][y] = self.join_of(x, y).ok_or(PosetError::NotALattice)?;
                meet[x][y] = self.meet_of(x, y).ok_or(PosetError::NotALattice)?;
            }
        }
        Ok((0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]))
        }))
    }

    /// Induced subposet on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> FinitePoset {
        let payloads = keep.iter().map(|&i| self.payloads[i].clone()).collect();
        let mut p = FinitePoset::from_relation(payloads, |a, b| self.leq(keep[a], keep[b]) && keep[a] != keep[b])
            .expect("induced order is a poset");
        p.weights = keep.iter().map(|&i| self.weights[i].clone()).collect();
        p
    }

    /// The closed interval `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> FinitePoset {
        let keep: Vec<usize> = (0..self.len()).filter(|&z| self.leq(lo, z) && self.leq(z, hi)).collect();
        self.induced(&keep)
    }

    /// Same elements with every cover reversed.
    pub fn order_dual(&self) -> FinitePoset {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        let mut p = FinitePoset::from_covers(self.payloads.clone(), &covers).expect("dual of a poset");
        p.weights = self.weights.clone();
        p
    }

    /// Cartesian product with payloads `(p,q)`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let m = other.len();
        let payloads = (0..self.len() * m)
            .map(|k| format!("({},{})", self.payloads[k / m], other.payloads[k % m]))
            .collect();
        let mut covers = Vec::new();
        for i in 0..self.len() {
            for j in 0..m {
                for &i2 in &self.up[i] {
                    covers.push((i * m + j, i2 * m + j));
                }
                for &j2 in &other.up[j] {
                    covers.push((i * m + j, i * m + j2));
                }
            }
        }
        FinitePoset::from_covers(payloads, &covers).expect("product of posets")
    }

    /// Graphviz digraph with edges drawn upward along covers.
    pub fn to_dot(&self) -> String {
        let names = self.weight_names();
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        for i in 0..self.len() {
            let label = escape(&self.payloads[i]);
            match &self.weights[i] {
                Some(w) => {
                    let tip = escape(&w.display_with(&names));
                    let _ = writeln!(s, "  n{i} [label=\"{label}\", tooltip=\"{tip}\"];");
                }
                None => {
                    let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
                }
            }
        }
        for &(x, y) in &self.covers {
            let _ = writeln!(s, "  n{x} -> n{y};");
        }
        s.push_str("}\n");
        s
    }

    fn weight_names(&self) -> Vec<String> {
        let nv = self.weights.iter().flatten().map(|w| w.nvars()).next().unwrap_or(0);
        default_names(nv)
    }

    /// JSON `{elements:[{id,payload,weight,rank}], covers:[[lo,hi]]}`.
    pub fn to_json(&self) -> Value {
        let names = self.weight_names();
        let rank = self.rank();
        let elements: Vec<Value> = (0..self.len())
            .map(|i| {
                json!({
                    "id": i,
                    "payload": self.payloads[i],
                    "weight": self.weights[i].as_ref().map(|w| w.to_json(&names)),
                    "rank": rank.as_ref().map(|r| r[i]),
                })
            })
            .collect();
        let covers: Vec<Value> = self.covers.iter().map(|&(x, y)| json!([x, y])).collect();
        json!({"elements": elements, "covers": covers})
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Lattice of order ideals ordered by inclusion, each node carrying its
/// ideal (sorted payloads of the members) as payload.
pub fn order_ideals(c: &FinitePoset) -> Result<FinitePoset, PosetError> {
    let n = c.len();
    if n > 64 {
        return Err(PosetError::TooLarge(n));
    }
    let down_mask: Vec<u64> = (0..n).map(|x| c.down[x].iter().fold(0u64, |m, &y| m | 1 << y)).collect();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut ideals = vec![0u64];
    index.insert(0, 0);
    let mut covers = Vec::new();
    let mut k = 0;
    while k < ideals.len() {
        let ideal = ideals[k];
        for (x, &dm) in down_mask.iter().enumerate() {
            if ideal >> x & 1 == 0 && dm & !ideal == 0 {
                let next = ideal | 1 << x;
                let j = *index.entry(next).or_insert_with(|| {
                    ideals.push(next);
                    ideals.len() - 1
                });
                covers.push((k, j));
            }
        }
        k += 1;
    }
    let payloads = ideals
        .iter()
        .map(|&m| {
            let mut members: Vec<&str> = (0..n).filter(|x| m >> x & 1 == 1).map(|x| c.payload(x)).collect();
            members.sort_unstable();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    FinitePoset::from_covers(payloads, &covers)
}

/// The chain `0 < 1 < ... < m-1`.
pub fn chain(m: usize) -> FinitePoset {
    let covers: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    FinitePoset::from_covers((0..m).map(|i| i.to_string()).collect(), &covers).expect("chain")
}

/// Antichain on `m` elements.
pub fn antichain(m: usize) -> FinitePoset {
    FinitePoset::from_covers((0..m).map(|i| i.to_string()).collect(), &[]).expect("antichain")
}

/// The fence `C_w` on elements `1..=l(w)+1`: letter `a` at position `i`
/// gives `i+1 < i`, letter `b` gives `i < i+1`.
pub fn fence(w: &Word) -> FinitePoset {
    let n = w.len() + 1;
    let covers: Vec<(usize, usize)> = w
        .letters()
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            Letter::A => (i + 1, i),
            Letter::B => (i, i + 1),
        })
        .collect();
    FinitePoset::from_covers((1..=n).map(|i| i.to_string()).collect(), &covers).expect("fence")
}

/// Boolean lattice of subsets of a `u`-element set.
pub fn boolean(u: usize) -> FinitePoset {
    order_ideals(&antichain(u)).expect("boolean lattice")
}

/// Fibonacci cube `Gamma_n`: ideals of the zigzag fence on `n` elements.
pub fn fibonacci_cube(n: usize) -> FinitePoset {
    if n == 0 {
        return order_ideals(&antichain(0)).expect("trivial lattice");
    }
    let zig: Word = Word::new((0..n - 1).map(|i| if i % 2 == 0 { Letter::A } else { Letter::B }).collect());
    order_ideals(&fence(&zig)).expect("Fibonacci cube")
}

/// Young diagrams in an `m x n` box, i.e. ideals of `chain(m) x chain(n)`.
pub fn grid_lattice(m: usize, n: usize) -> FinitePoset {
    order_ideals(&chain(m).product(&chain(n))).expect("grid lattice")
}

/// Isomorphism test; see [`find_isomorphism`].
pub fn poset_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// A bijection `phi` with `x < y` iff `phi(x) < phi(y)`, if one exists.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    find_isomorphism_by(p, q, |_, _| true)
}

/// Isomorphism that also satisfies `compatible(x, phi(x))` for every `x`.
pub fn find_isomorphism_by(
    p: &FinitePoset,
    q: &FinitePoset,
    compatible: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.covers.len() != q.covers.len() {
        return None;
    }
    let (cp, cq) = refine_colors(p, q);
    let mut hp: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hq: BTreeMap<u64, usize> = BTreeMap::new();
    cp.iter().for_each(|&c| *hp.entry(c).or_default() += 1);
    cq.iter().for_each(|&c| *hq.entry(c).or_default() += 1);
    if hp != hq {
        return None;
    }
    // Visit P in breadth-first order over the cover graph so each new element
    // has an already mapped neighbour whenever possible.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in p.up[x].iter().chain(&p.down[x]) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(p, q, &cp, &cq, &compatible, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &FinitePoset,
    q: &FinitePoset,
    cp: &[u64],
    cq: &[u64],
    compatible: &impl Fn(usize, usize) -> bool,
    order: &[usize],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    let anchor = p.up[x].iter().chain(&p.down[x]).find(|&&y| map[y] != usize::MAX).copied();
    let candidates: Vec<usize> = match anchor {
        Some(y) => q.up[map[y]].iter().chain(&q.down[map[y]]).copied().collect(),
        None => (0..q.len()).collect(),
    };
    for c in candidates {
        if used[c] || cp[x] != cq[c] || !compatible(x, c) {
            continue;
        }
        let consistent = p.up[x].iter().all(|&y| map[y] == usize::MAX || q.is_cover(c, map[y]))
            && p.down[x].iter().all(|&y| map[y] == usize::MAX || q.is_cover(map[y], c))
            && q.up[c].iter().filter(|&&z| used[z]).count() == p.up[x].iter().filter(|&&y| map[y] != usize::MAX).count()
            && q.down[c].iter().filter(|&&z| used[z]).count()
                == p.down[x].iter().filter(|&&y| map[y] != usize::MAX).count();
        if !consistent {
            continue;
        }
        map[x] = c;
        used[c] = true;
        if search(p, q, cp, cq, compatible, order, k + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[c] = false;
    }
    false
}

/// Joint colour refinement of both posets so colours are comparable.
fn refine_colors(p: &FinitePoset, q: &FinitePoset) -> (Vec<u64>, Vec<u64>) {
    let init = |r: &FinitePoset| -> Vec<(usize, usize, usize, usize)> {
        let h = r.heights();
        let d = r.depths();
        (0..r.len()).map(|i| (h[i], d[i], r.up[i].len(), r.down[i].len())).collect()
    };
    let mut table: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    let intern = |key: Vec<u64>, table: &mut BTreeMap<Vec<u64>, u64>| -> u64 {
        let next = table.len() as u64;
        *table.entry(key).or_insert(next)
    };
    let mut cp: Vec<u64> = init(p)
        .into_iter()
        .map(|t| intern(vec![t.0 as u64, t.1 as u64, t.2 as u64, t.3 as u64], &mut table))
        .collect();
    let mut cq: Vec<u64> = init(q)
        .into_iter()
        .map(|t| intern(vec![t.0 as u64, t.1 as u64, t.2 as u64, t.3 as u64], &mut table))
        .collect();
    for _ in 0..p.len().min(8) {
        let mut table2: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        let step = |r: &FinitePoset, c: &[u64], t: &mut BTreeMap<Vec<u64>, u64>| -> Vec<u64> {
            (0..r.len())
                .map(|i| {
                    let mut ups: Vec<u64> = r.up[i].iter().map(|&j| c[j]).collect();
                    let mut downs: Vec<u64> = r.down[i].iter().map(|&j| c[j]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    let mut key = vec![c[i], u64::MAX];
                    key.extend(ups);
                    key.push(u64::MAX);
                    key.extend(downs);
                    let next = t.len() as u64;
                    *t.entry(key).or_insert(next)
                })
                .collect()
        };
        let np = step(p, &cp, &mut table2);
        let nq = step(q, &cq, &mut table2);
        let stable = distinct(&np) == distinct(&cp) && distinct(&nq) == distinct(&cq);
        cp = np;
        cq = nq;
        if stable {
            break;
        }
    }
    (cp, cq)
}

fn distinct(c: &[u64]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{q_binomial, word};

    fn m3() -> FinitePoset {
        let p: Vec<String> = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
        FinitePoset::from_covers(p, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn fence_ab_covers() {
        let f = fence(&word("ab"));
        assert_eq!(f.covers(), &[(1, 0), (1, 2)]);
        assert_eq!(f.payload(1), "2");
    }

    #[test]
    fn ideals_of_fence_ab_is_gamma3() {
        let d = order_ideals(&fence(&word("ab"))).unwrap();
        assert_eq!(d.len(), 5);
        assert!(poset_isomorphic(&d, &fibonacci_cube(3)));
        assert_eq!(d.rank_generating_function().unwrap().coeffs_i64(), vec![1, 1, 2, 1]);
    }

    #[test]
    fn small_ideal_lattices() {
        assert_eq!(order_ideals(&antichain(0)).unwrap().len(), 1);
        assert!(poset_isomorphic(&order_ideals(&chain(2)).unwrap(), &chain(3)));
        assert_eq!(fibonacci_cube(3).len(), 5);
    }

    #[test]
    fn join_irreducibles_and_distributivity() {
        let g3 = fibonacci_cube(3);
        let j = g3.join_irreducibles().unwrap();
        assert!(poset_isomorphic(&j, &fence(&word("ab"))));
        assert!(g3.is_distributive().unwrap());
        let b2 = boolean(2);
        assert!(poset_isomorphic(&b2.join_irreducibles().unwrap(), &antichain(2)));
        assert!(b2.is_distributive().unwrap());
        assert!(!m3().is_distributive().unwrap());
        assert!(!m3().satisfies_distributive_law().unwrap());
        assert!(g3.satisfies_distributive_law().unwrap());
    }

    #[test]
    fn not_a_lattice() {
        assert_eq!(antichain(2).join_irreducibles().unwrap_err(), PosetError::NotALattice);
    }

    #[test]
    fn rank_polynomials() {
        assert_eq!(chain(4).rank_generating_function().unwrap().coeffs_i64(), vec![1, 1, 1, 1]);
        assert_eq!(grid_lattice(2, 2).rank_generating_function().unwrap(), q_binomial(4, 2));
        assert_eq!(grid_lattice(3, 3).rank_generating_function().unwrap(), q_binomial(6, 3));
        let ungraded =
            FinitePoset::from_covers(vec!["0".into(), "1".into(), "2".into(), "3".into()], &[(0, 1), (1, 2), (0, 3)])
                .unwrap();
        assert_eq!(ungraded.rank_generating_function(), Err(PosetError::NotGraded));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(!poset_isomorphic(&fibonacci_cube(3), &chain(4)));
        assert!(poset_isomorphic(&grid_lattice(2, 3), &grid_lattice(3, 2)));
        let g = fibonacci_cube(3);
        assert!(!poset_isomorphic(&g, &g.order_dual()));
        assert!(poset_isomorphic(&fibonacci_cube(4), &fibonacci_cube(4).order_dual()));
    }

    #[test]
    fn implied_cover_rejected() {
        let p: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        assert_eq!(FinitePoset::from_covers(p.clone(), &[(0, 1), (1, 2), (0, 2)]).unwrap_err(), PosetError::ImpliedCover(0, 2));
        assert_eq!(FinitePoset::from_covers(p, &[(0, 1), (1, 0)]).unwrap_err(), PosetError::Cyclic);
    }

    #[test]
    fn interval_and_product() {
        let b3 = boolean(3);
        let bot = b3.bottom().unwrap();
        let top = b3.top().unwrap();
        assert_eq!(b3.interval(bot, top).len(), 8);
        assert!(poset_isomorphic(&chain(2).product(&chain(2)), &boolean(2)));
    }

    #[test]
    fn exports() {
        let d = fence(&word("ab"));
        let j = d.to_json();
        assert_eq!(j["covers"], json!([[1, 0], [1, 2]]));
        assert_eq!(j["elements"][0]["rank"], json!(1));
        assert!(d.to_dot().contains("n1 -> n0;"));
    }
}
