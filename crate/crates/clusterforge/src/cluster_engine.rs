//! Laurent polynomials, quivers, seeds and mutation, the Ptolemy oracle for
//! polygon arcs, and the support orbit generated by the `y-hat` monomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::core::Word;
use crate::triangulation::LabeledTriangulation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("vertex {0} is frozen")]
    FrozenVertex(usize),
    #[error("vertex {0} is out of range")]
    NoSuchVertex(usize),
    #[error("exact division failed")]
    ExactDivisionFailed,
    #[error("chord ({0}, {1}) is not a chord of the polygon")]
    InvalidChord(usize, usize),
    #[error("orbit has more than {0} monomials")]
    OrbitTooLarge(usize),
}

/// Exponent vector of a Laurent monomial, one slot per variable.
pub type Exponents = Vec<i32>;

/// Laurent polynomial in `nvars` variables with integer coefficients.
///
/// Terms are kept in a sorted map without zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Exponents, coef: BigInt) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exps, coef);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// Monomial `prod x_i^{e_i}` built from `(index, exponent)` pairs.
    pub fn from_factors(nvars: usize, factors: &[(usize, i32)]) -> Self {
        let mut e = vec![0; nvars];
        for &(i, k) in factors {
            e[i] += k;
        }
        Self::monomial(e, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = LaurentPolynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a single term with coefficient 1.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_one()
    }

    /// The exponent vectors of the terms, i.e. the support.
    pub fn support(&self) -> BTreeSet<Exponents> {
        self.terms.keys().cloned().collect()
    }

    /// Component-wise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exponents {
        let mut m = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|a| *a = 0);
        }
        m
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Integer power, negative exponents allowed only for monomials.
    pub fn pow(&self, k: i32) -> Result<Self, ClusterError> {
        if k >= 0 {
            let mut acc = LaurentPolynomial::one(self.nvars);
            for _ in 0..k {
                acc = &acc * self;
            }
            Ok(acc)
        } else {
            LaurentPolynomial::one(self.nvars).div_exact(&self.pow(-k)?)
        }
    }

    /// Exact quotient `self / divisor`, failing if it is not a Laurent
    /// polynomial. Both sides are cleared of monomial denominators and divided
    /// by lexicographic long division.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ClusterError> {
        if divisor.is_zero() {
            return Err(ClusterError::ExactDivisionFailed);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = divisor.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(ClusterError::ExactDivisionFailed);
                }
                terms.insert(e.iter().zip(de).map(|(a, b)| a - b).collect(), q);
            }
            return Ok(LaurentPolynomial { nvars: self.nvars, terms });
        }
        let md = divisor.min_exponents();
        let mp = self.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|a| -a).collect::<Vec<_>>();
        let d = divisor.shift(&neg(&md));
        let mut r = self.shift(&neg(&mp));
        let (dlead_e, dlead_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut quotient = LaurentPolynomial::zero(self.nvars);
        while let Some((re, rc)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exponents = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&a| a < 0) {
                return Err(ClusterError::ExactDivisionFailed);
            }
            let (qc, rem) = rc.div_rem(&dlead_c);
            if !rem.is_zero() {
                return Err(ClusterError::ExactDivisionFailed);
            }
            let q = LaurentPolynomial::monomial(qe, qc);
            r = &r - &(&q * &d);
            quotient = &quotient + &q;
        }
        let back: Exponents = mp.iter().zip(&md).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&back))
    }

    /// True when every term has a nonnegative coefficient.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Evaluate with every variable set to 1.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Re-embed in a ring with more variables (new variables appended).
    pub fn widen(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        LaurentPolynomial { nvars, terms }
    }

    /// Render with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (num, den) = monomial_parts(e, names);
            if k > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            let a = c.abs();
            let num = if num.is_empty() { String::new() } else { num };
            let body = match (a.is_one(), num.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => num,
                (false, true) => a.to_string(),
                (false, false) => format!("{a}{num}"),
            };
            out.push_str(&body);
            if !den.is_empty() {
                out.push('/');
                out.push_str(&den);
            }
        }
        out
    }

    /// JSON form `{vars, terms:[{coef, exps}]}` with terms sorted by exponent.
    pub fn to_json(&self, names: &[String]) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"coef": c.to_string(), "exps": e}))
            .collect();
        json!({"vars": names, "terms": terms})
    }
}

fn monomial_parts(e: &[i32], names: &[String]) -> (String, String) {
    let mut num = String::new();
    let mut den = String::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let target = if k > 0 { &mut num } else { &mut den };
        target.push_str(&names[i]);
        if k.abs() > 1 {
            target.push_str(&format!("^{}", k.abs()));
        }
    }
    if den.contains(char::is_alphabetic) && den.matches('x').count() > 1 {
        den = format!("({den})");
    }
    (num, den)
}

/// Default names `x1, x2, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

/// Sum a nonempty-or-typed collection of Laurent polynomials.
pub fn sum_all<'a, I>(nvars: usize, items: I) -> LaurentPolynomial
where
    I: IntoIterator<Item = &'a LaurentPolynomial>,
{
    items.into_iter().fold(LaurentPolynomial::zero(nvars), |a, b| &a + b)
}

/// Quiver with `m` nodes of which the first `n` are mutable. Arrows are a
/// multiset stored as counts `arrows[i][j]` of arrows `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    m: usize,
    n: usize,
    arrows: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(n <= m);
        Quiver { m, n, arrows: vec![vec![0; m]; m] }
    }

    /// Build from a list of arrows, cancelling any 2-cycles.
    pub fn from_arrows(m: usize, n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut q = Quiver::new(m, n);
        for &(i, j) in arrows {
            q.add_arrow(i, j);
        }
        q.cancel_two_cycles();
        q
    }

    pub fn add_arrow(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "loops are not allowed");
        self.arrows[i][j] += 1;
    }

    fn cancel_two_cycles(&mut self) {
        for i in 0..self.m {
            for j in (i + 1)..self.m {
                let c = self.arrows[i][j].min(self.arrows[j][i]);
                self.arrows[i][j] -= c;
                self.arrows[j][i] -= c;
            }
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.m
    }

    pub fn num_mutable(&self) -> usize {
        self.n
    }

    pub fn is_mutable(&self, k: usize) -> bool {
        k < self.n
    }

    /// Number of arrows `i -> j`.
    pub fn count(&self, i: usize, j: usize) -> u32 {
        self.arrows[i][j]
    }

    /// Sorted list of arrows with multiplicity.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                for _ in 0..self.arrows[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Quiver mutation at `k`: compose paths through `k`, reverse the arrows
    /// at `k`, then cancel 2-cycles.
    #[allow(clippy::needless_range_loop)]
    pub fn mutate(&self, k: usize) -> Result<Quiver, ClusterError> {
        if k >= self.m {
            return Err(ClusterError::NoSuchVertex(k));
        }
        if !self.is_mutable(k) {
            return Err(ClusterError::FrozenVertex(k));
        }
        let mut a = self.arrows.clone();
        for i in 0..self.m {
            for j in 0..self.m {
                if i != k && j != k && i != j {
                    a[i][j] += self.arrows[i][k] * self.arrows[k][j];
                }
            }
        }
        for i in 0..self.m {
            let (ik, ki) = (a[i][k], a[k][i]);
            a[i][k] = ki;
            a[k][i] = ik;
        }
        let mut q = Quiver { m: self.m, n: self.n, arrows: a };
        q.cancel_two_cycles();
        Ok(q)
    }

    /// Induced subquiver on the first `n` (mutable) nodes.
    pub fn mutable_part(&self) -> Quiver {
        let mut q = Quiver::new(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                q.arrows[i][j] = self.arrows[i][j];
            }
        }
        q
    }
}

/// Free-function form of [`Quiver::mutate`].
pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver, ClusterError> {
    q.mutate(k)
}

/// A seed: quiver plus one Laurent polynomial per node, expressed in the
/// initial variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub quiver: Quiver,
    pub attachments: Vec<LaurentPolynomial>,
}

impl Seed {
    /// Seed whose attachment at node `i` is the variable `x_{i+1}`.
    pub fn initial(quiver: Quiver) -> Self {
        let m = quiver.num_nodes();
        let attachments = (0..m).map(|i| LaurentPolynomial::var(m, i)).collect();
        Seed { quiver, attachments }
    }

    /// Seed mutation at `k` with the exchange relation.
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        let quiver = self.quiver.mutate(k)?;
        let m = self.quiver.num_nodes();
        let nv = self.attachments[0].nvars();
        let mut into = LaurentPolynomial::one(nv);
        let mut out = LaurentPolynomial::one(nv);
        for s in 0..m {
            for _ in 0..self.quiver.count(s, k) {
                into = &into * &self.attachments[s];
            }
            for _ in 0..self.quiver.count(k, s) {
                out = &out * &self.attachments[s];
            }
        }
        let new = (&into + &out).div_exact(&self.attachments[k])?;
        let mut attachments = self.attachments.clone();
        attachments[k] = new;
        Ok(Seed { quiver, attachments })
    }

    /// Mutate along a sequence of vertices.
    pub fn mutate_sequence(&self, ks: &[usize]) -> Result<Seed, ClusterError> {
        ks.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}

/// Free-function form of [`Seed::mutate`].
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, ClusterError> {
    s.mutate(k)
}

/// The quiver `Q_w`: node `i` (0-based) carries label `i + 1` of the
/// triangulation `Delta_w`, nodes `0..n` are the diagonals, and each triangle
/// contributes a clockwise 3-cycle on its three edge labels.
pub fn build_qw(w: &Word) -> Quiver {
    quiver_of_triangulation(&LabeledTriangulation::from_word(w))
}

/// Clockwise 3-cycles on the edge labels of every triangle.
pub fn quiver_of_triangulation(t: &LabeledTriangulation) -> Quiver {
    let n = t.num_diagonals();
    let m = 2 * n + 3;
    let mut arrows = Vec::new();
    for tri in t.triangles() {
        let l = tri.labels;
        for s in 0..3 {
            arrows.push((l[s] - 1, l[(s + 1) % 3] - 1));
        }
    }
    Quiver::from_arrows(m, n, &arrows)
}

/// `y-hat_k = prod_{i -> k} x_i / prod_{k -> j} x_j` as an exponent vector.
pub fn hat_y(q: &Quiver, k: usize) -> Exponents {
    let m = q.num_nodes();
    (0..m).map(|i| q.count(i, k) as i32 - q.count(k, i) as i32).collect()
}

/// A monomial may sit in an orbit when no frozen variable has a negative
/// exponent or an exponent above one.
fn frozen_ok(e: &[i32], n_mutable: usize) -> bool {
    e[n_mutable..].iter().all(|&k| (0..=1).contains(&k))
}

/// Connected component of `start` in the groupoid whose moves multiply by
/// `y-hat_k^{+1}` or `y-hat_k^{-1}` and keep the frozen-variable conditions.
pub fn support_orbit(start: &[i32], q: &Quiver) -> BTreeSet<Exponents> {
    support_orbit_within(start, q, usize::MAX).expect("unbounded")
}

/// [`support_orbit`] that gives up once more than `limit` monomials are found.
pub fn support_orbit_within(start: &[i32], q: &Quiver, limit: usize) -> Result<BTreeSet<Exponents>, ClusterError> {
    let n = q.num_mutable();
    let ys: Vec<Exponents> = (0..n).map(|k| hat_y(q, k)).collect();
    let mut seen: BTreeSet<Exponents> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(e) = queue.pop_front() {
        for y in &ys {
            for sign in [1, -1] {
                let next: Exponents = e.iter().zip(y).map(|(a, b)| a + sign * b).collect();
                if frozen_ok(&next, n) && !seen.contains(&next) {
                    if seen.len() >= limit {
                        return Err(ClusterError::OrbitTooLarge(limit));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Cluster variables of every chord of a triangulated polygon, computed from
/// the Ptolemy relation.
///
/// For a chord `(a, b)` not in the triangulation, the triangle at `a` whose
/// opposite side `(p, q)` crosses the chord gives
/// `x_ab = (x_ap x_qb + x_aq x_pb) / x_pq` where `x_pq` is an initial variable.
pub struct PtolemyOracle<'t> {
    tri: &'t LabeledTriangulation,
    memo: HashMap<(usize, usize), LaurentPolynomial>,
}

impl<'t> PtolemyOracle<'t> {
    pub fn new(tri: &'t LabeledTriangulation) -> Self {
        PtolemyOracle { tri, memo: HashMap::new() }
    }

    fn nvars(&self) -> usize {
        2 * self.tri.num_diagonals() + 3
    }

    /// Cluster variable of the chord or side between polygon vertices `a`, `b`.
    pub fn chord(&mut self, a: usize, b: usize) -> Result<LaurentPolynomial, ClusterError> {
        let size = self.tri.polygon_size();
        if a == b || a >= size || b >= size {
            return Err(ClusterError::InvalidChord(a, b));
        }
        let key = (a.min(b), a.max(b));
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let value = if let Some(label) = self.tri.label_of(a, b) {
            LaurentPolynomial::var(self.nvars(), label - 1)
        } else {
            let (p, q) = self.tri.opposite_side_crossing(a, b).ok_or(ClusterError::InvalidChord(a, b))?;
            let pq = self.tri.label_of(p, q).expect("opposite side is an edge");
            let ap = self.chord(a, p)?;
            let qb = self.chord(q, b)?;
            let aq = self.chord(a, q)?;
            let pb = self.chord(p, b)?;
            let num = &(&ap * &qb) + &(&aq * &pb);
            num.div_exact(&LaurentPolynomial::var(self.nvars(), pq - 1))?
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    /// Cluster variable of the arc `gamma_w` between the endpoints `a`, `b`.
    pub fn gamma(&mut self) -> Result<LaurentPolynomial, ClusterError> {
        let (a, b) = self.tri.endpoints();
        self.chord(a, b)
    }
}

/// Every chord of the polygon mapped to its cluster variable.
pub fn ptolemy_chord_oracle(
    tri: &LabeledTriangulation,
) -> Result<BTreeMap<(usize, usize), LaurentPolynomial>, ClusterError> {
    let mut oracle = PtolemyOracle::new(tri);
    let size = tri.polygon_size();
    let mut out = BTreeMap::new();
    for a in 0..size {
        for b in (a + 1)..size {
            out.insert((a, b), oracle.chord(a, b)?);
        }
    }
    Ok(out)
}

/// The cluster variable `x_w` of the arc `gamma_w` in `Delta_w`.
pub fn cluster_variable(w: &Word) -> LaurentPolynomial {
    let t = LabeledTriangulation::from_word(w);
    PtolemyOracle::new(&t).gamma().expect("Ptolemy recursion is exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::word;

    fn x(nv: usize, f: &[(usize, i32)]) -> LaurentPolynomial {
        LaurentPolynomial::from_factors(nv, &f.iter().map(|&(i, k)| (i - 1, k)).collect::<Vec<_>>())
    }

    pub(crate) fn x_ab() -> LaurentPolynomial {
        let nv = 9;
        let num = [
            x(nv, &[(2, 2), (7, 1), (8, 1)]),
            x(nv, &[(2, 1), (5, 1), (7, 1), (9, 1)]),
            x(nv, &[(4, 1), (5, 1), (6, 1), (9, 1)]),
            x(nv, &[(2, 1), (4, 1), (6, 1), (8, 1)]),
            x(nv, &[(1, 1), (3, 1), (6, 1), (9, 1)]),
        ];
        sum_all(nv, num.iter()).div_exact(&x(nv, &[(1, 1), (2, 1), (3, 1)])).unwrap()
    }

    #[test]
    fn laurent_arithmetic_and_division() {
        let nv = 3;
        let a = &x(nv, &[(1, 1)]) + &x(nv, &[(2, 1)]);
        let b = &x(nv, &[(1, 1)]) - &x(nv, &[(3, -1)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        let c = &x(nv, &[(1, 1)]) + &LaurentPolynomial::one(nv);
        assert!(a.div_exact(&c).is_err());
        assert_eq!((&a - &a), LaurentPolynomial::zero(nv));
    }

    #[test]
    fn laurent_json_is_sorted() {
        let nv = 2;
        let p = &x(nv, &[(2, 1)]) + &x(nv, &[(1, 1)]);
        let j = p.to_json(&default_names(nv));
        assert_eq!(j["terms"][0]["exps"], json!([0, 1]));
        assert_eq!(j["terms"][1]["exps"], json!([1, 0]));
    }

    #[test]
    fn triangle_quiver_mutation_matches_example() {
        // 1 -> 2 -> 3 -> 1 mutated at 1: reverses arrows at 1 and cancels 2 <- 3.
        let q = Quiver::from_arrows(3, 3, &[(0, 1), (1, 2), (2, 0)]);
        let m = q.mutate(0).unwrap();
        assert_eq!(m.arrows(), vec![(0, 2), (1, 0)]);
        assert_eq!(m.mutate(0).unwrap(), q);
    }

    #[test]
    fn path_quiver_mutation() {
        // 1 <- 2 -> 3 mutated at 2 gives 1 -> 2 <- 3 with no arrow between 1 and 3.
        let q = Quiver::from_arrows(3, 3, &[(1, 0), (1, 2)]);
        let m = q.mutate(1).unwrap();
        assert_eq!(m.arrows(), vec![(0, 1), (2, 1)]);
    }

    #[test]
    fn frozen_vertex_rejected() {
        let q = Quiver::from_arrows(3, 1, &[(1, 0), (0, 2)]);
        assert_eq!(q.mutate(2), Err(ClusterError::FrozenVertex(2)));
    }

    #[test]
    fn a1_exchange() {
        let q = Quiver::from_arrows(3, 1, &[(1, 0), (0, 2)]);
        let s = Seed::initial(q).mutate(0).unwrap();
        let expected = (&x(3, &[(2, 1)]) + &x(3, &[(3, 1)])).div_exact(&x(3, &[(1, 1)])).unwrap();
        assert_eq!(s.attachments[0], expected);
        assert_eq!(s.mutate(0).unwrap().attachments[0], x(3, &[(1, 1)]));
    }

    #[test]
    fn qw_shapes() {
        let q = build_qw(&word("ab"));
        assert_eq!(q.num_nodes(), 9);
        assert_eq!(q.num_mutable(), 3);
        // four 3-cycles, including the frozen arrows 6 -> 7 and 9 -> 8
        assert_eq!(q.arrows().len(), 12);
        assert_eq!((q.count(5, 6), q.count(8, 7)), (1, 1));
        let q0 = build_qw(&word(""));
        assert_eq!((q0.num_nodes(), q0.num_mutable()), (5, 1));
        assert_eq!(q0.arrows().len(), 6);
    }

    #[test]
    fn qw_mutable_part_follows_letters() {
        // letter a orients i <- i+1, letter b orients i -> i+1
        for w in Word::all_up_to(6) {
            let q = build_qw(&w).mutable_part();
            for (i, l) in w.letters().iter().enumerate() {
                let (fwd, back) = (q.count(i, i + 1), q.count(i + 1, i));
                match l {
                    crate::core::Letter::A => assert_eq!((fwd, back), (0, 1), "{w}"),
                    crate::core::Letter::B => assert_eq!((fwd, back), (1, 0), "{w}"),
                }
            }
            assert_eq!(q.arrows().len(), w.len());
        }
    }

    #[test]
    fn ptolemy_gives_x_ab() {
        assert_eq!(cluster_variable(&word("ab")), x_ab());
    }

    #[test]
    fn ptolemy_on_triangulation_edge_is_unit() {
        let t = LabeledTriangulation::from_word(&word("ab"));
        let mut o = PtolemyOracle::new(&t);
        for (a, b, label) in t.edges() {
            assert_eq!(o.chord(a, b).unwrap(), LaurentPolynomial::var(9, label - 1));
        }
    }

    #[test]
    fn pentagon_fan_longest_chord_has_three_terms() {
        let t = LabeledTriangulation::from_word(&word("a"));
        let v = PtolemyOracle::new(&t).gamma().unwrap();
        assert_eq!(v.num_terms(), 3);
    }

    #[test]
    fn ptolemy_identity_on_all_quadruples() {
        for w in Word::all_up_to(6) {
            let t = LabeledTriangulation::from_word(&w);
            let chords = ptolemy_chord_oracle(&t).unwrap();
            let s = t.polygon_size();
            let x = |a: usize, b: usize| chords[&(a.min(b), a.max(b))].clone();
            for i in 0..s {
                for j in (i + 1)..s {
                    for k in (j + 1)..s {
                        for l in (k + 1)..s {
                            let lhs = &x(i, k) * &x(j, l);
                            let rhs = &(&x(i, j) * &x(k, l)) + &(&x(i, l) * &x(j, k));
                            assert_eq!(lhs, rhs, "{w} {i}{j}{k}{l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mutation_reaches_x_ab() {
        // Flipping the diagonals in the order 1, 2, 3 turns the last flipped
        // diagonal into gamma_ab.
        let s = Seed::initial(build_qw(&word("ab")));
        let s = s.mutate_sequence(&[0, 1, 2]).unwrap();
        assert_eq!(s.attachments[2], x_ab());
    }

    #[test]
    fn support_orbit_of_x_ab() {
        let q = build_qw(&word("ab"));
        let start = x(9, &[(6, 1), (9, 1), (2, -1)]);
        let e = start.terms().keys().next().unwrap().clone();
        let orbit = support_orbit(&e, &q);
        let support = x_ab().support();
        assert!(support.is_subset(&orbit));
        for other in &support {
            assert_eq!(&support_orbit(other, &q), &orbit);
        }
        // x2 x7 x8 / (x1 x3) times y-hat_2 = x4 x5 / (x1 x3) passes both
        // frozen-variable conditions but is not a monomial of x_ab
        let extra = x(9, &[(2, 1), (4, 1), (5, 1), (7, 1), (8, 1), (1, -2), (3, -2)]);
        let extra = extra.terms().keys().next().unwrap().clone();
        assert_eq!(orbit.len(), support.len() + 1);
        assert!(orbit.contains(&extra));
    }

    #[test]
    fn support_orbit_of_initial_variable() {
        let q = build_qw(&word("ab"));
        let e = LaurentPolynomial::var(9, 0).terms().keys().next().unwrap().clone();
        let orbit = support_orbit(&e, &q);
        // x1 * x4 x5 / (x1 x3) = x4 x5 / x3 has no frozen denominator
        let moved = x(9, &[(4, 1), (5, 1), (3, -1)]);
        assert!(orbit.contains(moved.terms().keys().next().unwrap()));
    }
}
