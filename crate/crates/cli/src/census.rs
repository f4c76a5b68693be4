//! Census of all unlabeled posets up to a size bound: per-variety counts
//! of admissible operations, structural flags, and a witness table,
//! serialized one record per line in a stable key=value encoding.

use anyhow::Result;
use posemigroup::enumerate::enumerate_posets;
use posemigroup::search::find_admissible;
use posemigroup::{BandOp, SearchConfig, SearchMode, Variety};

/// Counting three varieties per poset is exponential; five elements is the
/// largest size that stays interactive.
pub const MAX_CENSUS_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: usize,
    /// Row-major bit-string of the canonical representative's relation.
    pub bitstring: String,
    pub rrb: u64,
    pub rnb: u64,
    pub comm: u64,
    pub is_tree: bool,
    pub is_meet_semilattice: bool,
    pub is_relative_meet_semilattice: bool,
    /// Lexicographically least admissible right-regular table, if any.
    pub witness: Option<BandOp>,
}

impl CensusRecord {
    /// One `key=value` line; the witness is the flat row-major table.
    pub fn line(&self) -> String {
        let witness = match &self.witness {
            Some(op) => {
                let cells: Vec<String> = op.table().iter().map(|v| v.to_string()).collect();
                cells.join(",")
            }
            None => "none".to_string(),
        };
        format!(
            "n={} poset={} rrb={} rnb={} comm={} tree={} meet={} relmeet={} witness={}",
            self.n,
            self.bitstring,
            self.rrb,
            self.rnb,
            self.comm,
            self.is_tree,
            self.is_meet_semilattice,
            self.is_relative_meet_semilattice,
            witness,
        )
    }
}

/// Runs the census over every unlabeled poset with `1 ≤ n ≤ max_n`, in
/// (n, bit-string) order. Output is deterministic for a given `max_n`.
pub fn run_census(max_n: usize) -> Result<Vec<CensusRecord>> {
    if max_n > MAX_CENSUS_N {
        anyhow::bail!("census supports max-n up to {MAX_CENSUS_N}, got {max_n}");
    }
    let mut records = Vec::new();
    for n in 1..=max_n {
        for p in enumerate_posets(n, false)? {
            let count = |variety: Variety| -> Result<u64> {
                Ok(find_admissible(&p, SearchConfig { variety, mode: SearchMode::Count })?.count)
            };
            let rrb = count(Variety::Rrb)?;
            let rnb = count(Variety::Rnb)?;
            let comm = count(Variety::Commutative)?;
            if !(comm <= rnb && rnb <= rrb) {
                anyhow::bail!(
                    "internal invariant breach: variety counts not nested on {}",
                    p.bitstring()
                );
            }
            let witness = find_admissible(
                &p,
                SearchConfig { variety: Variety::Rrb, mode: SearchMode::First },
            )?
            .found()
            .cloned();
            records.push(CensusRecord {
                n,
                bitstring: p.bitstring(),
                rrb,
                rnb,
                comm,
                is_tree: p.is_tree(),
                is_meet_semilattice: p.is_meet_semilattice(),
                is_relative_meet_semilattice: p.is_relative_meet_semilattice(),
                witness,
            });
        }
    }
    Ok(records)
}

pub fn census_text(records: &[CensusRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_to_3_has_eight_records() {
        let records = run_census(3).unwrap();
        assert_eq!(records.len(), 1 + 2 + 5);
    }

    #[test]
    fn singleton_record_has_all_counts_one() {
        let records = run_census(1).unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert_eq!((r.rrb, r.rnb, r.comm), (1, 1, 1));
        assert!(r.is_tree && r.is_meet_semilattice && r.is_relative_meet_semilattice);
        assert!(r.witness.is_some());
    }

    #[test]
    fn every_four_element_poset_is_associative() {
        let records = run_census(4).unwrap();
        assert_eq!(records.iter().filter(|r| r.n == 4).count(), 16);
        assert!(records.iter().all(|r| r.rrb >= 1));
    }

    #[test]
    fn census_bytes_are_stable() {
        let a = census_text(&run_census(4).unwrap());
        let b = census_text(&run_census(4).unwrap());
        assert_eq!(a, b);
        assert!(a.is_ascii());
    }

    #[test]
    fn guard_rejects_large_max_n() {
        assert!(run_census(6).is_err());
    }
}
