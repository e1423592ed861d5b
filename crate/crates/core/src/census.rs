//! Exact tallies of all topologies on `n` labelled points by separation profile.
//!
//! Work is split by fixed prefixes of the preorder matrix; each prefix is an
//! independent sub-search and the per-prefix tallies merge by addition, so the
//! table does not depend on how many workers ran it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::enumerate::{preorder_prefixes, PreorderSearch, MAX_TOPOLOGY_POINTS};
use crate::error::{Error, Result};
use crate::separation::{axiom_profile, SeparationProfile};

/// Default ceiling for [`census`]; `n = 7` needs [`CensusOptions::allow_large`].
pub const DEFAULT_CENSUS_LIMIT: usize = 6;

/// Header of the CSV rendering.
pub const CSV_HEADER: &str = "n,t0,t1,t2,t01,t02,t12,regular,normal,zero_dim,sober,count";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub n: usize,
    /// Profile signature to number of topologies with that profile.
    pub rows: BTreeMap<u16, u64>,
    pub total: u64,
}

impl CensusTable {
    fn empty(n: usize) -> Self {
        CensusTable {
            n,
            rows: BTreeMap::new(),
            total: 0,
        }
    }

    fn record(&mut self, profile: SeparationProfile) {
        *self.rows.entry(profile.signature()).or_default() += 1;
        self.total += 1;
    }

    fn merge(mut self, other: CensusTable) -> CensusTable {
        for (sig, count) in other.rows {
            *self.rows.entry(sig).or_default() += count;
        }
        self.total += other.total;
        self
    }

    /// Number of topologies whose profile satisfies `pred`.
    pub fn count_where(&self, pred: impl Fn(&SeparationProfile) -> bool) -> u64 {
        self.rows
            .iter()
            .filter(|(&sig, _)| pred(&SeparationProfile::from_signature(sig)))
            .map(|(_, &c)| c)
            .sum()
    }

    /// Rows in ascending signature order.
    pub fn profiles(&self) -> impl Iterator<Item = (SeparationProfile, u64)> + '_ {
        self.rows
            .iter()
            .map(|(&sig, &c)| (SeparationProfile::from_signature(sig), c))
    }

    /// CSV with booleans as `0`/`1`, rows ordered by signature.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_HEADER);
        out.push('\n');
        for (profile, count) in self.profiles() {
            write!(out, "{}", self.n).unwrap();
            for v in profile.values() {
                write!(out, ",{}", u8::from(v)).unwrap();
            }
            writeln!(out, ",{count}").unwrap();
        }
        out
    }
}

/// Runtime knobs for [`census_with`].
#[derive(Default)]
pub struct CensusOptions<'a> {
    /// Worker threads; `None` uses every available core.
    pub workers: Option<usize>,
    /// Permit `n = 7`.
    pub allow_large: bool,
    /// Called with `(finished, total)` sub-searches as work completes.
    pub progress: Option<&'a (dyn Fn(usize, usize) + Sync)>,
}

/// Census with default options.
pub fn census(n: usize) -> Result<CensusTable> {
    census_with(n, &CensusOptions::default())
}

pub fn census_with(n: usize, options: &CensusOptions<'_>) -> Result<CensusTable> {
    let limit = if options.allow_large {
        MAX_TOPOLOGY_POINTS
    } else {
        DEFAULT_CENSUS_LIMIT
    };
    if n > limit {
        return Err(Error::SizeLimit {
            what: "census point count",
            got: n,
            max: limit,
        });
    }
    // The first two rows of the matrix give up to 4^(n-1) independent pieces.
    let depth = 2 * n.saturating_sub(1);
    let prefixes = preorder_prefixes(n, depth);
    let finished = AtomicUsize::new(0);
    let run = |prefix: &Vec<bool>| {
        let mut table = CensusTable::empty(n);
        for space in PreorderSearch::with_prefix(n, prefix).expect("listed prefixes are consistent")
        {
            table.record(axiom_profile(&space));
        }
        if let Some(progress) = options.progress {
            progress(finished.fetch_add(1, Ordering::Relaxed) + 1, prefixes.len());
        }
        table
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = options.workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::CrossCheck(format!("could not start worker pool: {e}")))?;
    Ok(pool.install(|| {
        prefixes
            .par_iter()
            .map(run)
            .reduce(|| CensusTable::empty(n), CensusTable::merge)
    }))
}
