//! Exact checks of the linear relations among Tutte coefficients.
//!
//! With `m = |E|`, `r = r(E)` and `T = sum t_ij x^i y^j`:
//!
//! * substituting `x = z/(z-1)`, `y = z` and clearing denominators gives
//!   `sum t_ij z^(i+j) (z-1)^(r-i) = z^m` ([`verify_hyperbola`]);
//! * comparing coefficients of `z^k` gives one relation per `k`
//!   ([`coefficient_identity_lhs`]), equal to `1` at `k = m` and `0` elsewhere;
//! * summing those relations with weights `(-1)^k C(h-r, h-k)`
//!   ([`combination_weight`]) collapses, by Vandermonde's convolution
//!   ([`verify_weight_collapse`]), to the Brylawski sum
//!   ([`brylawski_lhs`] = [`brylawski_rhs`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bipoly::{binomial, expand_hyperbola, sign, BiPoly, UniPoly};
use crate::error::{Error, Result};

/// `sum_{i<=h} sum_{j<=h-i} C(h-i, j) (-1)^j t_ij`.
pub fn brylawski_lhs(t: &BiPoly, h: u32) -> BigInt {
    t.terms()
        .filter(|&(i, j, _)| i <= h && j <= h - i)
        .map(|(i, j, c)| c * binomial(i64::from(h - i), i64::from(j)) * sign(i64::from(j)))
        .sum()
}

/// `(-1)^(m-r) C(h-r, h-m)`, taken as zero when `h < m`.
pub fn brylawski_rhs(m: u32, r: u32, h: u32) -> Result<BigInt> {
    if r > m {
        return Err(Error::InvalidParameters(format!(
            "rank {r} exceeds ground set size {m}"
        )));
    }
    if h < m {
        return Ok(BigInt::zero());
    }
    Ok(binomial(i64::from(h - r), i64::from(h - m)) * sign(i64::from(m - r)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub h: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
}

/// One Brylawski relation per `h`. `pass` holds iff `lhs == rhs`, and
/// `overall` iff every entry passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub entries: Vec<IdentityEntry>,
    pub overall: bool,
}

impl IdentityReport {
    pub fn from_entries(entries: Vec<(u32, BigInt, BigInt)>) -> Self {
        let entries: Vec<IdentityEntry> = entries
            .into_iter()
            .map(|(h, lhs, rhs)| IdentityEntry {
                pass: lhs == rhs,
                h,
                lhs,
                rhs,
            })
            .collect();
        let overall = entries.iter().all(|e| e.pass);
        Self { entries, overall }
    }

    pub fn first_failure(&self) -> Option<&IdentityEntry> {
        self.entries.iter().find(|e| !e.pass)
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            overall: self.overall,
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson {
                    h: e.h,
                    lhs: e.lhs.to_string(),
                    rhs: e.rhs.to_string(),
                    pass: e.pass,
                })
                .collect(),
        }
    }
}

/// `{"overall": bool, "entries": [{"h":H,"lhs":"<decimal>","rhs":"<decimal>","pass":bool}...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub overall: bool,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub h: u32,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Checks the Brylawski relation for every `h` in `0..=h_max`.
pub fn verify_brylawski(t: &BiPoly, m: u32, r: u32, h_max: u32) -> Result<IdentityReport> {
    let entries = (0..=h_max)
        .map(|h| Ok((h, brylawski_lhs(t, h), brylawski_rhs(m, r, h)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::from_entries(entries))
}

/// True iff `sum t_ij z^(i+j) (z-1)^(r-i)` is exactly `z^m`.
pub fn verify_hyperbola(t: &BiPoly, m: u32, r: u32) -> Result<bool> {
    Ok(expand_hyperbola(t, r)? == UniPoly::monomial(m, 1))
}

/// Coefficient of `z^k` in the cleared hyperbola expansion:
/// `sum t_ij (-1)^(r-k+j) C(r-i, k-(i+j))`.
pub fn coefficient_identity_lhs(t: &BiPoly, r: u32, k: u32) -> BigInt {
    let (r, k) = (i64::from(r), i64::from(k));
    t.terms()
        .map(|(i, j, c)| {
            let (i, j) = (i64::from(i), i64::from(j));
            c * binomial(r - i, k - (i + j)) * sign(r - k + j)
        })
        .sum()
}

/// Returns the first `k` in `0..=k_max` whose relation fails, with its value.
pub fn first_coefficient_failure(t: &BiPoly, m: u32, r: u32, k_max: u32) -> Option<(u32, BigInt)> {
    (0..=k_max).find_map(|k| {
        let lhs = coefficient_identity_lhs(t, r, k);
        let expected = if k == m {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        (lhs != expected).then_some((k, lhs))
    })
}

/// `(-1)^k C(h-r, h-k)`; the upper argument is negative when `h < r`.
pub fn combination_weight(h: u32, r: u32, k: u32) -> BigInt {
    let (h, r, k) = (i64::from(h), i64::from(r), i64::from(k));
    binomial(h - r, h - k) * sign(k)
}

/// `sum_{k=0..=h} C(h-r, h-k) C(r-i, k-(i+j)) == C(h-i, h-(i+j))`.
pub fn verify_weight_collapse(h: u32, r: u32, i: u32, j: u32) -> bool {
    let (h, r, i, j) = (i64::from(h), i64::from(r), i64::from(i), i64::from(j));
    let lhs: BigInt = (0..=h)
        .map(|k| binomial(h - r, h - k) * binomial(r - i, k - (i + j)))
        .sum();
    lhs == binomial(h - i, h - (i + j))
}

/// Rebuilds the Brylawski relation at `h` from the per-`k` relations.
///
/// Checks that the weighted sum `sum_k C_{h,k} L_k` of the coefficient
/// relations equals both the weighted right sides `C_{h,m}` and
/// `(-1)^r` times the Brylawski sum, and that the weight collapse holds for
/// every `(i, j)` in the support of `t` with `i + j <= h`.
pub fn verify_weighted_combination(t: &BiPoly, m: u32, r: u32, h: u32) -> bool {
    let weighted: BigInt = (0..=h)
        .map(|k| combination_weight(h, r, k) * coefficient_identity_lhs(t, r, k))
        .sum();
    let weighted_rhs = if m <= h {
        combination_weight(h, r, m)
    } else {
        BigInt::zero()
    };
    let collapsed = brylawski_lhs(t, h) * sign(i64::from(r));
    let support_ok = t
        .terms()
        .filter(|&(i, j, _)| i + j <= h)
        .all(|(i, j, _)| verify_weight_collapse(h, r, i, j));
    weighted == weighted_rhs && weighted == collapsed && support_ok
}

/// The three smallest classical relations, each applicable once `m` is large
/// enough: `t00 = 0` (m >= 1), `t10 = t01` (m >= 2), `t20 - t11 + t02 = t10` (m >= 3).
/// Returns `(name, holds)` for the applicable ones.
pub fn classical_identities(t: &BiPoly, m: u32) -> Vec<(&'static str, bool)> {
    let c = |i, j| t.coefficient(i, j);
    let mut out = Vec::new();
    if m >= 1 {
        out.push(("t00 = 0", c(0, 0).is_zero()));
    }
    if m >= 2 {
        out.push(("t10 = t01", c(1, 0) == c(0, 1)));
    }
    if m >= 3 {
        out.push((
            "t20 - t11 + t02 = t10",
            c(2, 0) - c(1, 1) + c(0, 2) == c(1, 0),
        ));
    }
    out
}
