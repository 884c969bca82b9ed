use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::Multigraph;
use crate::error::{Error, Result};

/// Largest ground set stored as an explicit `2^m` rank table.
pub const MAX_TABLE_ELEMENTS: usize = 24;

/// A ground set `0..m` with a rank for every subset, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedSet {
    m: usize,
    r_total: u32,
    ranks: Vec<u32>,
}

impl RankedSet {
    /// Wraps a table without checking the rank bound; see [`RankedSet::validate`].
    pub fn from_table(m: usize, r_total: u32, ranks: Vec<u32>) -> Result<Self> {
        if m > MAX_TABLE_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                size: m,
                limit: MAX_TABLE_ELEMENTS,
            });
        }
        if ranks.len() != 1 << m {
            return Err(Error::InvalidParameters(format!(
                "rank table for m = {m} needs {} entries, got {}",
                1u64 << m,
                ranks.len()
            )));
        }
        Ok(Self { m, r_total, ranks })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn total_rank(&self) -> u32 {
        self.r_total
    }

    pub fn rank(&self, subset: u64) -> u32 {
        self.ranks[subset as usize]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn full_set(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    /// Checks `r(S) <= min(r(E), |S|)` for every `S` and `ranks(E) = r(E)`,
    /// reporting the first subset (in mask order) that breaks either.
    pub fn validate(&self) -> Result<()> {
        for (mask, &rank) in self.ranks.iter().enumerate() {
            let size = mask.count_ones();
            let breach = if rank > size {
                Some(format!("|S| = {size}"))
            } else if rank > self.r_total {
                Some(format!("r(E) = {}", self.r_total))
            } else {
                None
            };
            if let Some(bound) = breach {
                return Err(Error::RankBound {
                    subset: mask as u64,
                    rank,
                    bound: format!("{rank} > {bound}"),
                });
            }
        }
        let full = self.full_set();
        if self.rank(full) != self.r_total {
            return Err(Error::RankBound {
                subset: full,
                rank: self.rank(full),
                bound: format!("the full set must have rank r(E) = {}", self.r_total),
            });
        }
        Ok(())
    }

    /// `U(r, m)`: `r(S) = min(|S|, r)`.
    pub fn uniform(r: u32, m: usize) -> Result<Self> {
        if r as usize > m {
            return Err(Error::InvalidParameters(format!(
                "uniform matroid needs r <= m, got r = {r}, m = {m}"
            )));
        }
        guard(m)?;
        let ranks = (0..1u64 << m).map(|s| s.count_ones().min(r)).collect();
        Self::from_table(m, r, ranks)
    }

    /// Every nonempty proper subset gets an independent uniform rank in
    /// `0..=min(r_total, |S|)`. Deterministic in `seed`.
    pub fn random(m: usize, r_total: u32, seed: u64) -> Result<Self> {
        if r_total as usize > m {
            return Err(Error::InvalidParameters(format!(
                "random ranked set needs r <= m, got r = {r_total}, m = {m}"
            )));
        }
        guard(m)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = (1u64 << m) - 1;
        let ranks = (0..=full)
            .map(|s| {
                if s == 0 {
                    0
                } else if s == full {
                    r_total
                } else {
                    rng.gen_range(0..=s.count_ones().min(r_total))
                }
            })
            .collect();
        Self::from_table(m, r_total, ranks)
    }

    /// The graphic ranked set: `r(S) = n - k(S)`.
    pub fn of_graph(g: &Multigraph) -> Result<Self> {
        let m = g.edge_count();
        guard(m)?;
        let n = g.vertex_count();
        let ranks: Vec<u32> = (0..1u64 << m)
            .map(|s| (n - g.component_count_mask(s)) as u32)
            .collect();
        Self::from_table(m, g.rank(), ranks)
    }

    pub fn to_json(&self) -> RankTableJson {
        RankTableJson {
            m: self.m,
            r: self.r_total,
            ranks: RankMap(self.ranks.clone()),
        }
    }

    /// Reads the rank-table JSON form. All `2^m` keys must be present; the
    /// rank bound itself is left to [`RankedSet::validate`].
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawRankTable = serde_json::from_str(text)?;
        guard(raw.m)?;
        if raw.r < 0 {
            return Err(Error::Parse(format!("negative total rank {}", raw.r)));
        }
        let size = 1usize << raw.m;
        let mut ranks: Vec<Option<u32>> = vec![None; size];
        for (key, rank) in &raw.ranks {
            let mask: usize = key.parse().map_err(|_| {
                Error::Parse(format!("subset key {key:?} is not a decimal bitmask"))
            })?;
            if mask >= size {
                return Err(Error::Parse(format!(
                    "subset key {mask} out of range for m = {}",
                    raw.m
                )));
            }
            if *rank < 0 {
                return Err(Error::RankBound {
                    subset: mask as u64,
                    rank: 0,
                    bound: format!("rank {rank} is negative"),
                });
            }
            if ranks[mask].replace(*rank as u32).is_some() {
                return Err(Error::Parse(format!("subset key {mask} given twice")));
            }
        }
        let ranks = ranks
            .into_iter()
            .enumerate()
            .map(|(mask, r)| {
                r.ok_or_else(|| Error::Parse(format!("missing rank for subset {mask}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::from_table(raw.m, raw.r as u32, ranks)
    }
}

fn guard(m: usize) -> Result<()> {
    if m > MAX_TABLE_ELEMENTS {
        Err(Error::GroundSetTooLarge {
            size: m,
            limit: MAX_TABLE_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

/// `{"m": M, "r": R, "ranks": {"<mask>": rank, ...}}`, keys in numeric order.
#[derive(Clone, Debug, Serialize)]
pub struct RankTableJson {
    pub m: usize,
    pub r: u32,
    pub ranks: RankMap,
}

#[derive(Clone, Debug)]
pub struct RankMap(pub Vec<u32>);

impl Serialize for RankMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (mask, rank) in self.0.iter().enumerate() {
            map.serialize_entry(&mask.to_string(), rank)?;
        }
        map.end()
    }
}

#[derive(Deserialize)]
struct RawRankTable {
    m: usize,
    r: i64,
    ranks: BTreeMap<String, i64>,
}
