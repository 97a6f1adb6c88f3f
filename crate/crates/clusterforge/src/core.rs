//! Words over {a, b}, continued fractions, exact rationals and q-polynomials.
//!
//! Positions in a word are 1-indexed in the docs and 0-indexed in code, so the
//! odd positions starred by [`Word::dual`] are the indices 0, 2, 4, ...

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number with a positive reduced denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("invalid letter {0:?}, expected 'a' or 'b'")]
    InvalidLetter(char),
    #[error("continued fraction must be nonempty with positive entries")]
    InvalidContinuedFraction,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

/// A letter of a binary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    /// Swap a and b.
    pub fn star(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A finite word over {a, b}. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Boolean shape predicates of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordPredicates {
    pub straight: bool,
    pub zigzag: bool,
    pub symmetric: bool,
    pub self_conjugate: bool,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// `count` copies of `letter`.
    pub fn repeat(letter: Letter, count: usize) -> Self {
        Word { letters: vec![letter; count] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 0-indexed position `i`.
    pub fn get(&self, i: usize) -> Option<Letter> {
        self.letters.get(i).copied()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// The dual word: star every letter in an odd (1-indexed) position.
    pub fn dual(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, &l)| if i % 2 == 0 { l.star() } else { l })
            .collect();
        Word { letters }
    }

    /// Star every letter.
    pub fn transpose(&self) -> Word {
        Word { letters: self.letters.iter().map(|l| l.star()).collect() }
    }

    /// Reverse the letters.
    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Reverse and star every letter.
    pub fn conjugate(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.star()).collect() }
    }

    /// True when only one letter occurs (vacuously true for length 0).
    pub fn is_straight(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] == p[1])
    }

    /// True when no two consecutive letters agree.
    pub fn is_zigzag(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != p[1])
    }

    /// True when the word reads the same backwards.
    pub fn is_symmetric(&self) -> bool {
        self.reversed() == *self
    }

    /// True when the word equals its conjugate.
    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn predicates(&self) -> WordPredicates {
        WordPredicates {
            straight: self.is_straight(),
            zigzag: self.is_zigzag(),
            symmetric: self.is_symmetric(),
            self_conjugate: self.is_self_conjugate(),
        }
    }

    /// All words of length `len`, in lexicographic order with a < b.
    pub fn all_of_length(len: usize) -> Vec<Word> {
        (0..1usize << len)
            .map(|mask| {
                let letters = (0..len)
                    .map(|i| if mask >> (len - 1 - i) & 1 == 1 { Letter::B } else { Letter::A })
                    .collect();
                Word { letters }
            })
            .collect()
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(Word::all_of_length).collect()
    }

    /// Lengths of the maximal runs of equal letters.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((last, n)) if *last == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(CoreError::InvalidLetter(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(Word { letters })
    }
}

/// Parse a word, panicking on bad input. Intended for literals in tests.
pub fn word(s: &str) -> Word {
    s.parse().expect("word literal")
}

/// Free-function form of [`Word::dual`].
pub fn dual_word(w: &Word) -> Word {
    w.dual()
}

/// Free-function form of [`Word::predicates`].
pub fn word_predicates(w: &Word) -> WordPredicates {
    w.predicates()
}

/// A finite continued fraction `[a_1, ..., a_k]` with positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContinuedFraction {
    entries: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<u64>) -> Result<Self, CoreError> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(CoreError::InvalidContinuedFraction);
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Exact value of the nested fraction.
    pub fn value(&self) -> Rational {
        let mut acc = Rational::from_integer(BigInt::from(*self.entries.last().unwrap()));
        for &a in self.entries.iter().rev().skip(1) {
            acc = Rational::from_integer(BigInt::from(a)) + acc.recip();
        }
        acc
    }

    /// Write each entry as a sum of ones, swap "," with "+", and re-read.
    pub fn dual(&self) -> ContinuedFraction {
        let mut entries = vec![1u64];
        for (i, &a) in self.entries.iter().enumerate() {
            for j in 0..a {
                if i == 0 && j == 0 {
                    continue;
                }
                // an inner "+" becomes "," and a "," becomes "+"
                if j > 0 {
                    entries.push(1);
                } else {
                    *entries.last_mut().unwrap() += 1;
                }
            }
        }
        ContinuedFraction { entries }
    }

    /// Rewrite a trailing `[..., a, 1]` as `[..., a + 1]`.
    pub fn normalized(&self) -> ContinuedFraction {
        let mut entries = self.entries.clone();
        if entries.len() > 1 && *entries.last().unwrap() == 1 {
            entries.pop();
            *entries.last_mut().unwrap() += 1;
        }
        ContinuedFraction { entries }
    }

    /// Run-length encoding of a sign sequence, starting a new entry at each
    /// change of sign.
    pub fn from_runs<T: PartialEq>(signs: &[T]) -> Result<Self, CoreError> {
        let mut entries: Vec<u64> = Vec::new();
        for (i, s) in signs.iter().enumerate() {
            if i > 0 && signs[i - 1] == *s {
                *entries.last_mut().unwrap() += 1;
            } else {
                entries.push(1);
            }
        }
        ContinuedFraction::new(entries)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Free-function form of [`ContinuedFraction::value`].
pub fn cf_value(cf: &ContinuedFraction) -> Rational {
    cf.value()
}

/// Free-function form of [`ContinuedFraction::dual`].
pub fn cf_dual(cf: &ContinuedFraction) -> ContinuedFraction {
    cf.dual()
}

/// Polynomial in one variable `q` with arbitrary-precision integer coefficients.
/// Coefficient `i` multiplies `q^i`; the representation is trimmed so the last
/// stored coefficient is nonzero, and the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs<I: Into<BigInt>>(coeffs: Vec<I>) -> Self {
        let mut p = QPolynomial { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as `i64`, panicking on overflow. Convenient for tests.
    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| i64::try_from(c).expect("coefficient fits in i64")).collect()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divide by `q^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Result<Self, CoreError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(CoreError::InexactDivision);
        }
        Ok(QPolynomial { coeffs: self.coeffs.iter().skip(k).cloned().collect() })
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `q^deg p(1/q)`: the coefficient list read backwards.
    pub fn reversed(&self) -> Self {
        QPolynomial { coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<Self, CoreError> {
        let dd = divisor.degree().ok_or(CoreError::InexactDivision)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(QPolynomial::zero()) } else { Err(CoreError::InexactDivision) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(CoreError::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(CoreError::InexactDivision);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::one(), |a, b| &a * &b)
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`; `[0]_q = 0`.
pub fn q_number(m: usize) -> QPolynomial {
    QPolynomial { coeffs: vec![BigInt::one(); m] }
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: usize) -> QPolynomial {
    (1..=m).map(q_number).product()
}

/// Gaussian binomial coefficient as the exact quotient of q-factorials.
/// Returns zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let denom = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n).div_exact(&denom).expect("q-factorial quotient is exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize, k: usize) -> QPolynomial {
        if k == 0 || k == n {
            return QPolynomial::one();
        }
        if k > n {
            return QPolynomial::zero();
        }
        &pascal(n - 1, k - 1) + &pascal(n - 1, k).shift(k)
    }

    #[test]
    fn dual_word_examples() {
        assert_eq!(word("ab").dual(), word("bb"));
        assert_eq!(word("").dual(), word(""));
        assert_eq!(word("aabab").dual().dual(), word("aabab"));
    }

    #[test]
    fn predicate_examples() {
        let p = word("aabb").predicates();
        assert!(p.self_conjugate);
        assert!(!p.symmetric);
        assert!(word("baaab").predicates().symmetric);
        let e = word("").predicates();
        assert!(e.straight && e.zigzag);
    }

    #[test]
    fn named_word_examples_from_symmetry_discussion() {
        assert!(!word("aab").is_symmetric() && !word("aab").is_self_conjugate());
        assert!(!word("baa").is_symmetric() && !word("baa").is_self_conjugate());
        assert!(word("baab").is_symmetric());
        assert!(word("aabaa").is_symmetric());
    }

    #[test]
    fn cf_value_examples() {
        let cf = ContinuedFraction::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(cf.value(), Rational::new(5.into(), 3.into()));
        let single = ContinuedFraction::new(vec![7]).unwrap();
        assert_eq!(single.value(), Rational::from_integer(7.into()));
        let cf = ContinuedFraction::new(vec![2, 1, 1]).unwrap();
        assert_eq!(cf.value(), Rational::new(5.into(), 2.into()));
    }

    #[test]
    fn cf_rejects_bad_entries() {
        assert!(ContinuedFraction::new(vec![]).is_err());
        assert!(ContinuedFraction::new(vec![1, 0]).is_err());
    }

    #[test]
    fn cf_dual_examples() {
        let cf = |v: Vec<u64>| ContinuedFraction::new(v).unwrap();
        assert_eq!(cf(vec![1, 1, 1, 1]).dual(), cf(vec![4]));
        assert_eq!(cf(vec![3, 2]).dual().dual(), cf(vec![3, 2]));
        assert_eq!(cf(vec![2, 2]).dual(), cf(vec![1, 2, 1]));
        assert_eq!(cf(vec![1]).dual(), cf(vec![1]));
    }

    #[test]
    fn cf_normalization() {
        let cf = ContinuedFraction::new(vec![2, 3, 1]).unwrap();
        assert_eq!(cf.normalized().entries(), &[2, 4]);
        assert_eq!(cf.normalized().value(), cf.value());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(6, 3).coeffs_i64(), vec![1, 1, 2, 3, 3, 3, 3, 2, 1, 1]);
        assert_eq!(q_binomial(5, 0), QPolynomial::one());
        assert_eq!(q_binomial(4, 2), pascal(4, 2));
        assert_eq!(q_binomial(4, 2).coeffs_i64(), vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn q_binomial_matches_pascal_and_is_palindromic_unimodal() {
        for n in 0..=12 {
            for k in 0..=n {
                let p = q_binomial(n, k);
                assert_eq!(p, pascal(n, k));
                let c = p.coeffs_i64();
                let mut rev = c.clone();
                rev.reverse();
                assert_eq!(c, rev);
                let peak = c.iter().enumerate().max_by_key(|(_, v)| **v).unwrap().0;
                assert!(c[..=peak].windows(2).all(|w| w[0] <= w[1]));
                assert!(c[peak..].windows(2).all(|w| w[0] >= w[1]));
                let binom: i64 = (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
                assert_eq!(p.at_one(), BigInt::from(binom));
            }
        }
    }

    #[test]
    fn q_polynomial_display() {
        let p = QPolynomial::from_coeffs(vec![1, 2, 0, 3]);
        assert_eq!(p.to_string(), "1 + 2q + 3q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn div_exact_detects_remainder() {
        let p = QPolynomial::from_coeffs(vec![1, 1, 1]);
        assert!(p.div_exact(&q_number(2)).is_err());
        assert_eq!((&q_number(3) * &q_number(2)).div_exact(&q_number(2)).unwrap(), q_number(3));
    }
}
