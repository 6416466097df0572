//! Brute-force exhaustive enumerators for every combinatorial family used
//! by the sequence engines. These are intentionally dumb: depth-first
//! construction of actual objects (paths, arc sets, permutations,
//! partitions) with counting only, so they can serve as independent ground
//! truth for the recursions at small sizes.
//!
//! Every enumerator enforces a size budget so a typo cannot spin forever.
//! Budgets are configuration, not constants. Path counters can fan out over
//! DFS prefixes when the `parallel` feature is on; the final count is a sum
//! of per-prefix counts, so the result does not depend on scheduling.

use std::collections::BTreeMap;

use crate::par;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct OracleBudget {
    pub dyck: usize,
    pub motzkin: usize,
    pub secondary: usize,
    pub delannoy: usize,
    pub schroeder: usize,
    pub permutations: usize,
    pub partitions: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            dyck: 14,
            motzkin: 16,
            secondary: 18,
            delannoy: 10,
            schroeder: 10,
            permutations: 9,
            partitions: 9,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub budget: OracleBudget,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: OracleBudget::default(), parallel: par::parallel_enabled() }
    }
}

impl OracleConfig {
    pub fn sequential() -> Self {
        OracleConfig { budget: OracleBudget::default(), parallel: false }
    }
}

/// Result of enumerating Dyck paths: total count plus a histogram of paths
/// by number of peaks (an up-step immediately followed by a down-step).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckEnumeration {
    pub count: u64,
    pub peaks: BTreeMap<usize, u64>,
}

fn check_budget(family: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::BudgetExceeded { family, n, max });
    }
    Ok(())
}

/// Count Dyck paths of length `2n` and histogram them by peak count.
pub fn enum_dyck(n: usize) -> Result<DyckEnumeration> {
    enum_dyck_with(n, &OracleConfig::default())
}

pub fn enum_dyck_with(n: usize, cfg: &OracleConfig) -> Result<DyckEnumeration> {
    check_budget("dyck", n, cfg.budget.dyck)?;
    let mut peaks = BTreeMap::new();
    let mut count = 0u64;
    walk_dyck(0, 2 * n, 0, 0, false, &mut count, &mut peaks);
    Ok(DyckEnumeration { count, peaks })
}

// state: steps taken, height, peaks so far, whether the last step was up
fn walk_dyck(
    taken: usize,
    total: usize,
    height: usize,
    peaks_so_far: usize,
    last_up: bool,
    count: &mut u64,
    hist: &mut BTreeMap<usize, u64>,
) {
    if taken == total {
        if height == 0 {
            *count += 1;
            *hist.entry(peaks_so_far).or_insert(0) += 1;
        }
        return;
    }
    // prune: must be able to come back down
    if height > total - taken {
        return;
    }
    walk_dyck(taken + 1, total, height + 1, peaks_so_far, true, count, hist);
    if height > 0 {
        let p = peaks_so_far + usize::from(last_up);
        walk_dyck(taken + 1, total, height - 1, p, false, count, hist);
    }
}

/// Count Motzkin paths of length `n`.
pub fn enum_motzkin(n: usize) -> Result<u64> {
    enum_motzkin_with(n, &OracleConfig::default())
}

pub fn enum_motzkin_with(n: usize, cfg: &OracleConfig) -> Result<u64> {
    check_budget("motzkin", n, cfg.budget.motzkin)?;
    fn complete(steps_left: usize, height: usize) -> u64 {
        if height > steps_left {
            return 0;
        }
        if steps_left == 0 {
            return 1; // height == 0 guaranteed by the prune above
        }
        let mut total = complete(steps_left - 1, height) + complete(steps_left - 1, height + 1);
        if height > 0 {
            total += complete(steps_left - 1, height - 1);
        }
        total
    }
    if !cfg.parallel || n < 10 {
        return Ok(complete(n, 0));
    }
    // fan out over every partial path of a fixed prefix length
    let depth = 8.min(n);
    let mut frontier = Vec::new();
    fn prefixes(left: usize, height: usize, out: &mut Vec<usize>) {
        if left == 0 {
            out.push(height);
            return;
        }
        prefixes(left - 1, height, out);
        prefixes(left - 1, height + 1, out);
        if height > 0 {
            prefixes(left - 1, height - 1, out);
        }
    }
    prefixes(depth, 0, &mut frontier);
    let counts = par::map_ordered(frontier, true, |height| complete(n - depth, height));
    Ok(counts.into_iter().sum())
}

/// Count secondary structures of rank `l` on `n` vertices: sets of pairwise
/// disjoint, non-crossing upper-half-plane arcs `(i, j)` with `j - i > l`.
/// Rank -1 is the degenerate convention in which an arc may also be a loop
/// at a single vertex (span 0), matching the non-simple-graph reading.
pub fn enum_secondary(l: i64, n: usize) -> Result<u64> {
    enum_secondary_with(l, n, &OracleConfig::default())
}

pub fn enum_secondary_with(l: i64, n: usize, cfg: &OracleConfig) -> Result<u64> {
    check_budget("secondary", n, cfg.budget.secondary)?;
    if l < -1 {
        return Err(Error::InvalidInput(format!("rank {l} < -1")));
    }
    let mut used = 0u32;
    let mut arcs = Vec::new();
    Ok(walk_arcs(1, n, l, &mut used, &mut arcs))
}

// Vertices are 1..=n; `used` marks arc endpoints; `arcs` holds placed arcs
// so the crossing check is an honest pairwise scan, not a recursion trick.
fn walk_arcs(from: usize, n: usize, l: i64, used: &mut u32, arcs: &mut Vec<(usize, usize)>) -> u64 {
    let mut v = from;
    while v <= n && *used & (1 << v) != 0 {
        v += 1;
    }
    if v > n {
        return 1;
    }
    // leave v unpaired
    let mut total = walk_arcs(v + 1, n, l, used, arcs);
    // or attach an arc (v, j) with span j - v > l; v is the leftmost free
    // vertex, so every existing arc starts strictly left of v
    let j_min = ((v as i64 + l + 1).max(v as i64)) as usize;
    for j in j_min..=n {
        if j != v && *used & (1 << j) != 0 {
            continue;
        }
        if arcs.iter().any(|&(_, b)| v < b && b < j) {
            continue; // would cross (a, b) with a < v < b < j
        }
        *used |= 1 << v;
        *used |= 1 << j;
        arcs.push((v, j));
        total += walk_arcs(v + 1, n, l, used, arcs);
        arcs.pop();
        *used &= !(1 << j);
        *used &= !(1 << v);
    }
    total
}

/// Count king's paths (steps right, up, diagonal) from (0,0) to (n,n).
pub fn enum_delannoy(n: usize) -> Result<u64> {
    enum_delannoy_with(n, &OracleConfig::default())
}

pub fn enum_delannoy_with(n: usize, cfg: &OracleConfig) -> Result<u64> {
    check_budget("delannoy", n, cfg.budget.delannoy)?;
    Ok(lattice_walk(n, false, cfg.parallel))
}

/// Count big Schröder paths: king's paths that never rise above `y = x`.
pub fn enum_schroeder(n: usize) -> Result<u64> {
    enum_schroeder_with(n, &OracleConfig::default())
}

pub fn enum_schroeder_with(n: usize, cfg: &OracleConfig) -> Result<u64> {
    check_budget("schroeder", n, cfg.budget.schroeder)?;
    Ok(lattice_walk(n, true, cfg.parallel))
}

fn lattice_walk(n: usize, below_diagonal: bool, parallel: bool) -> u64 {
    fn complete(x: usize, y: usize, n: usize, below: bool) -> u64 {
        if below && y > x {
            return 0;
        }
        if x == n && y == n {
            return 1;
        }
        let mut total = 0;
        if x < n {
            total += complete(x + 1, y, n, below);
        }
        if y < n {
            total += complete(x, y + 1, n, below);
        }
        if x < n && y < n {
            total += complete(x + 1, y + 1, n, below);
        }
        total
    }
    if !parallel || n < 6 {
        return complete(0, 0, n, below_diagonal);
    }
    // fan out over all positions reachable in exactly `depth` moves
    let depth = 5;
    let mut frontier = Vec::new();
    fn prefixes(
        x: usize,
        y: usize,
        moves: usize,
        n: usize,
        below: bool,
        out: &mut Vec<(usize, usize)>,
    ) {
        if below && y > x {
            return;
        }
        if moves == 0 {
            out.push((x, y));
            return;
        }
        if x == n && y == n {
            return; // already finished: shorter than the prefix depth
        }
        if x < n {
            prefixes(x + 1, y, moves - 1, n, below, out);
        }
        if y < n {
            prefixes(x, y + 1, moves - 1, n, below, out);
        }
        if x < n && y < n {
            prefixes(x + 1, y + 1, moves - 1, n, below, out);
        }
    }
    prefixes(0, 0, depth, n, below_diagonal, &mut frontier);
    let counts = par::map_ordered(frontier, true, |(x, y)| complete(x, y, n, below_diagonal));
    counts.into_iter().sum()
}

/// Counts of permutations of `[n]` by number of cycles, indices `k = 0..=n`,
/// obtained by generating all `n!` permutations with Heap's algorithm.
pub fn enum_permutations_by_cycles(n: usize) -> Result<Vec<u64>> {
    enum_permutations_by_cycles_with(n, &OracleConfig::default())
}

pub fn enum_permutations_by_cycles_with(n: usize, cfg: &OracleConfig) -> Result<Vec<u64>> {
    check_budget("permutations", n, cfg.budget.permutations)?;
    let mut row = vec![0u64; n + 1];
    if n == 0 {
        row[0] = 1; // the empty permutation has zero cycles
        return Ok(row);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    count_cycles(&perm, &mut row);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count_cycles(&perm, &mut row);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(row)
}

fn count_cycles(perm: &[usize], row: &mut [u64]) {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
        }
    }
    row[cycles] += 1;
}

/// Counts of set partitions of `[n]` by number of blocks, indices `k = 0..=n`,
/// obtained by generating all restricted-growth strings.
pub fn enum_partitions_by_blocks(n: usize) -> Result<Vec<u64>> {
    enum_partitions_by_blocks_with(n, &OracleConfig::default())
}

pub fn enum_partitions_by_blocks_with(n: usize, cfg: &OracleConfig) -> Result<Vec<u64>> {
    check_budget("partitions", n, cfg.budget.partitions)?;
    let mut row = vec![0u64; n + 1];
    if n == 0 {
        row[0] = 1;
        return Ok(row);
    }
    fn grow(pos: usize, n: usize, max_block: usize, row: &mut [u64]) {
        if pos == n {
            row[max_block + 1] += 1;
            return;
        }
        for block in 0..=max_block + 1 {
            grow(pos + 1, n, max_block.max(block), row);
        }
    }
    grow(1, n, 0, &mut row);
    Ok(row)
}
