use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bipoly::{binomial, sign, BiPoly};
use crate::error::Result;
use crate::structures::RankedSet;

/// Sums `(x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))` over every subset `S`.
///
/// Subsets are first bucketed by `(corank, nullity)`, then each bucket is
/// expanded with the binomial theorem.
pub fn tutte_subset_expansion(rs: &RankedSet) -> Result<BiPoly> {
    rs.validate()?;
    let r_total = rs.total_rank();
    let mut buckets: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for (mask, &rank) in rs.ranks().iter().enumerate() {
        let size = mask.count_ones();
        *buckets.entry((r_total - rank, size - rank)).or_default() += 1;
    }
    let mut t = BiPoly::zero();
    for ((corank, nullity), count) in buckets {
        let (a, b) = (i64::from(corank), i64::from(nullity));
        let count = BigInt::from(count);
        for i in 0..=a {
            let xi = &count * binomial(a, i) * sign(a - i);
            for j in 0..=b {
                t.add_term(i as u32, j as u32, &xi * binomial(b, j) * sign(b - j));
            }
        }
    }
    Ok(t)
}
