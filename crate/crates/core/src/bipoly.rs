//! Sparse polynomials over unbounded integers.
//!
//! [`BiPoly`] holds polynomials in `x` and `y` (Tutte polynomials and their
//! coefficient arrays), [`UniPoly`] holds polynomials in a single variable `z`.
//! Both keep their terms in a `BTreeMap`, so iteration and serialization are
//! sorted by exponent and byte-stable across runs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Bivariate polynomial `sum c_ij x^i y^j`. No stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    /// Builds a polynomial from `(i, j, c)` triples. Repeated exponents are
    /// summed; zero results are dropped.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (u32, u32, C)>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    /// Adds `c x^i y^j` in place.
    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// The coefficient of `x^i y^j`; zero when absent or when an exponent is negative.
    pub fn coefficient(&self, i: i64, j: i64) -> BigInt {
        match (u32::try_from(i), u32::try_from(j)) {
            (Ok(i), Ok(j)) => self.terms.get(&(i, j)).cloned().unwrap_or_default(),
            _ => BigInt::zero(),
        }
    }

    /// Largest exponent of `x` over the support, `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiplies by `x^di y^dj`.
    pub fn shift(&self, di: u32, dj: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * Pow::pow(x0, i) * Pow::pow(y0, j))
            .sum()
    }

    /// Every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms()
                .map(|(i, j, c)| TermJson {
                    i,
                    j,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, Error> {
        let mut p = Self::zero();
        for t in &json.terms {
            let c: BigInt = t.c.parse().map_err(|_| {
                Error::Parse(format!("bad coefficient {:?} at t[{}][{}]", t.c, t.i, t.j))
            })?;
            p.add_term(t.i, t.j, c);
        }
        Ok(p)
    }

    /// Renders the polynomial as a LaTeX sum of monomials.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest total degree first reads most naturally
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(i, j, _)| std::cmp::Reverse((i + j, i)));
        for (n, (i, j, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = latex_monomial(i, j);
            if mono.is_empty() || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

fn latex_monomial(i: u32, j: u32) -> String {
    let var = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{{{e}}}"),
    };
    format!("{}{}", var("x", i), var("y", j))
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, j, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{i}*y^{j}")?;
        }
        Ok(())
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for ((i, j), c) in rhs.terms {
            self.add_term(i, j, c);
        }
        self
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

/// Univariate polynomial in `z`. No stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(d: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c.into());
        p
    }

    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (u32, C)>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    pub fn add_term(&mut self, d: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn coefficient(&self, d: i64) -> BigInt {
        u32::try_from(d)
            .ok()
            .and_then(|d| self.terms.get(&d).cloned())
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval(&self, z0: &BigInt) -> BigInt {
        self.terms.iter().map(|(&d, c)| c * Pow::pow(z0, d)).sum()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (d, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*z^{d}")?;
        }
        Ok(())
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

/// Generalized binomial coefficient: `n (n-1) ... (n-k+1) / k!` for `k >= 0`
/// and any integer `n`, zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    // for 0 <= n < k the falling factorial passes through zero
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // C(n, k) = C(n, n-k) for n >= 0 keeps the loop short
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for step in 0..k {
        // acc = C(n, step) exactly, so the division never truncates
        acc = acc * BigInt::from(n - step) / BigInt::from(step + 1);
    }
    acc
}

/// `(-1)^e` as a small integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Expands `sum t_ij z^(i+j) (z-1)^(r-i)` into a polynomial in `z`.
///
/// Fails with [`Error::RankExceedingTerm`] if `t` has a term with `i > r`,
/// since `(z-1)^(r-i)` would then not be a polynomial.
pub fn expand_hyperbola(t: &BiPoly, r: u32) -> Result<UniPoly, Error> {
    let mut out = UniPoly::zero();
    for (i, j, c) in t.terms() {
        if i > r {
            return Err(Error::RankExceedingTerm { i, j, r });
        }
        let e = i64::from(r - i);
        for l in 0..=e {
            let coeff = c * binomial(e, l) * sign(e - l);
            out.add_term(i + j + l as u32, coeff);
        }
    }
    Ok(out)
}

/// One term of the polynomial JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: u32,
    pub j: u32,
    pub c: String,
}

/// `{"terms":[{"i":I,"j":J,"c":"<decimal>"}...]}`, terms sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}
