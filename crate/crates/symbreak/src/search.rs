//! Exact computation of the distinguishing number D(G) and index D'(G).
//!
//! The search runs per label count r in two phases: a cheap heuristic
//! attempt (striped and seeded-random labelings), then an exhaustive sweep
//! that either finds a witness or proves that no r-labeling works. Sweeps
//! enumerate restricted-growth labelings only (label k+1 may appear only
//! after label k), which covers every labeling up to label renaming, and
//! additionally skip labelings that a small set of group elements maps to
//! something lexicographically smaller. Both prunings preserve at least one
//! representative of every distinguishing labeling, so a failed sweep is a
//! proof of impossibility.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aut;
use crate::error::{Error, Result};
use crate::graph::{induced_edge_permutation, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Vertex,
    Edge,
}

/// Total vertex labeling; labels are 1-based and every vertex gets one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    pub labels: Vec<usize>,
}

/// Total edge labeling over the graph's canonical edge indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub labels: Vec<usize>,
}

pub fn max_label(labels: &[usize]) -> usize {
    labels.iter().copied().max().unwrap_or(0)
}

pub(crate) fn validate_labels(labels: &[usize], expected_len: usize) -> Result<()> {
    if labels.len() != expected_len {
        return Err(Error::InvalidParameter(format!(
            "labeling has {} entries, expected {expected_len}",
            labels.len()
        )));
    }
    if labels.contains(&0) {
        return Err(Error::InvalidParameter("labels are 1-based".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoneReason {
    /// Some non-identity automorphism fixes every edge; no edge labeling
    /// can ever be distinguishing (e.g. K_2).
    EdgeKernel,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub kind: LabelKind,
    pub value: Option<usize>,
    pub witness: Option<Vec<usize>>,
    #[serde(rename = "tested")]
    pub labelings_tested: u64,
    pub automorphisms_checked: u64,
    pub group_order: u64,
    /// Label counts r for which the sweep exhaustively proved failure.
    pub failure_proofs: Vec<usize>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub none_reason: Option<NoneReason>,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Largest label count to try before giving up with `NotFound`.
    pub max_labels: Option<usize>,
    /// Cap on labelings tested before `Timeout`.
    pub max_tested: u64,
    /// Wall-clock cap before `Timeout`.
    pub budget_ms: u64,
    pub threads: usize,
    pub seed: u64,
    pub heuristic_tries: u32,
    /// Cap passed to group enumeration.
    pub group_cap: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_labels: None,
            max_tested: u64::MAX,
            budget_ms: 600_000,
            threads: 1,
            seed: 0x5d15_7e55,
            heuristic_tries: 64,
            group_cap: Some(20_000_000),
        }
    }
}

/// The labeled points (vertices or edges) together with the non-identity
/// permutations the automorphism group induces on them.
struct Action {
    points: usize,
    /// Non-identity point permutations, most-fixing first.
    perms: Vec<Vec<usize>>,
    /// Small subset used for orbit-minimality pruning.
    prune: Vec<Vec<usize>>,
}

impl Action {
    fn new(points: usize, mut perms: Vec<Vec<usize>>) -> Action {
        perms.sort_by_key(|p| {
            let fixed = p.iter().enumerate().filter(|&(i, &j)| i == j).count();
            std::cmp::Reverse(fixed)
        });
        let prune: Vec<Vec<usize>> = perms.iter().take(8).cloned().collect();
        Action { points, perms, prune }
    }

    /// True iff no listed permutation preserves the labeling; returns the
    /// number of permutations scanned.
    fn is_distinguishing(&self, labels: &[usize]) -> (bool, u64) {
        let mut scanned = 0u64;
        for p in &self.perms {
            scanned += 1;
            if labels.iter().enumerate().all(|(i, &l)| l == labels[p[i]]) {
                return (false, scanned);
            }
        }
        (true, scanned)
    }
}

/// Exact distinguishing number with verified witness and failure proofs.
pub fn exact_distinguishing_number(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let group = aut::enumerate_automorphisms(g, opts.group_cap)?;
    let perms: Vec<Vec<usize>> = group.non_identity().map(|p| p.image().to_vec()).collect();
    let action = Action::new(g.vertex_count(), perms);
    let max_labels = opts.max_labels.unwrap_or(g.vertex_count());
    let mut result = run_search(&action, LabelKind::Vertex, group.order(), max_labels, opts)?;
    if let Some(w) = &result.witness {
        // re-verify against a freshly enumerated group
        let fresh = aut::enumerate_automorphisms(g, opts.group_cap)?;
        if !aut::is_vertex_distinguishing(g, &fresh, w)? {
            return Err(Error::ConstructionFailure(
                "search witness failed re-verification".into(),
            ));
        }
        result.automorphisms_checked += fresh.order() - 1;
    }
    Ok(result)
}

/// Exact distinguishing index. Returns value `None` with the edge-kernel
/// reason when some non-identity automorphism fixes every edge.
pub fn exact_distinguishing_index(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    let start = Instant::now();
    let group = aut::enumerate_automorphisms(g, opts.group_cap)?;
    if aut::edge_kernel_is_nontrivial(g, &group) {
        return Ok(SearchResult {
            kind: LabelKind::Edge,
            value: None,
            witness: None,
            labelings_tested: 0,
            automorphisms_checked: group.order() - 1,
            group_order: group.order(),
            failure_proofs: Vec::new(),
            elapsed_ms: start.elapsed().as_millis() as u64,
            none_reason: Some(NoneReason::EdgeKernel),
        });
    }
    let mut set: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for p in group.non_identity() {
        set.insert(induced_edge_permutation(g, p)?);
    }
    let identity: Vec<usize> = (0..g.edge_count()).collect();
    set.remove(&identity);
    let action = Action::new(g.edge_count(), set.into_iter().collect());
    let max_labels = opts.max_labels.unwrap_or(g.edge_count().max(1));
    let mut result = run_search(&action, LabelKind::Edge, group.order(), max_labels, opts)?;
    if let Some(w) = &result.witness {
        let fresh = aut::enumerate_automorphisms(g, opts.group_cap)?;
        if !aut::is_edge_distinguishing(g, &fresh, w)? {
            return Err(Error::ConstructionFailure(
                "search witness failed re-verification".into(),
            ));
        }
        result.automorphisms_checked += fresh.order() - 1;
    }
    Ok(result)
}

fn run_search(
    action: &Action,
    kind: LabelKind,
    group_order: u64,
    max_labels: usize,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    let mut tested = 0u64;
    let mut checked = 0u64;
    let mut failure_proofs = Vec::new();

    if action.perms.is_empty() {
        return Ok(SearchResult {
            kind,
            value: Some(1),
            witness: Some(vec![1; action.points]),
            labelings_tested: 1,
            automorphisms_checked: 0,
            group_order,
            failure_proofs,
            elapsed_ms: start.elapsed().as_millis() as u64,
            none_reason: None,
        });
    }
    // constant labelings are preserved by everything, so r = 1 always fails
    failure_proofs.push(1);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for r in 2..=max_labels.max(1) {
        if let Some(w) = heuristic_phase(action, r, opts, &mut rng, &mut tested, &mut checked) {
            return Ok(SearchResult {
                kind,
                value: Some(r),
                witness: Some(w),
                labelings_tested: tested,
                automorphisms_checked: checked,
                group_order,
                failure_proofs,
                elapsed_ms: start.elapsed().as_millis() as u64,
                none_reason: None,
            });
        }
        match sweep(action, r, opts, start, &mut tested, &mut checked)? {
            Some(w) => {
                return Ok(SearchResult {
                    kind,
                    value: Some(r),
                    witness: Some(w),
                    labelings_tested: tested,
                    automorphisms_checked: checked,
                    group_order,
                    failure_proofs,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                    none_reason: None,
                });
            }
            None => failure_proofs.push(r),
        }
    }
    Err(Error::NotFound { max_labels })
}

fn heuristic_phase(
    action: &Action,
    r: usize,
    opts: &SearchOptions,
    rng: &mut ChaCha8Rng,
    tested: &mut u64,
    checked: &mut u64,
) -> Option<Vec<usize>> {
    let m = action.points;
    if r > m {
        return None;
    }
    let striped: Vec<usize> = (0..m).map(|i| i % r + 1).collect();
    *tested += 1;
    let (ok, scanned) = action.is_distinguishing(&striped);
    *checked += scanned;
    if ok {
        return Some(striped);
    }
    for _ in 0..opts.heuristic_tries {
        let cand: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=r)).collect();
        if (1..=r).any(|l| !cand.contains(&l)) {
            continue; // must use exactly r labels
        }
        *tested += 1;
        let (ok, scanned) = action.is_distinguishing(&cand);
        *checked += scanned;
        if ok {
            return Some(cand);
        }
    }
    None
}

/// Exhaustive sweep over restricted-growth labelings with exactly `r`
/// distinct labels. Returns a witness or `None` (a completed failure
/// proof); propagates `Timeout` when the budget runs out.
fn sweep(
    action: &Action,
    r: usize,
    opts: &SearchOptions,
    start: Instant,
    tested: &mut u64,
    checked: &mut u64,
) -> Result<Option<Vec<usize>>> {
    if r > action.points {
        return Ok(None);
    }
    let shared = SweepShared {
        found: AtomicBool::new(false),
        abort: AtomicBool::new(false),
        tested: AtomicU64::new(*tested),
        checked: AtomicU64::new(*checked),
        witness: Mutex::new(None),
        start,
        max_tested: opts.max_tested,
        budget_ms: opts.budget_ms,
    };

    let threads = opts.threads.max(1);
    if threads == 1 {
        let mut labels = vec![0usize; action.points];
        sweep_rec(action, r, &shared, &mut labels, 0, 0);
    } else {
        let mut prefixes: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        let mut depth = 0;
        while depth < action.points && prefixes.len() < threads * 8 {
            let mut next = Vec::new();
            for (p, maxl) in &prefixes {
                let hi = (maxl + 1).min(r);
                for l in 1..=hi {
                    let mut q = p.clone();
                    q.push(l);
                    next.push((q, (*maxl).max(l)));
                }
            }
            prefixes = next;
            depth += 1;
        }
        std::thread::scope(|scope| {
            for tid in 0..threads {
                let prefixes = &prefixes;
                let shared = &shared;
                scope.spawn(move || {
                    let mut labels = vec![0usize; action.points];
                    for (i, (prefix, maxl)) in prefixes.iter().enumerate() {
                        if i % threads != tid {
                            continue;
                        }
                        labels[..prefix.len()].copy_from_slice(prefix);
                        sweep_rec(action, r, shared, &mut labels, prefix.len(), *maxl);
                    }
                });
            }
        });
    }

    *tested = shared.tested.load(Ordering::Relaxed);
    *checked = shared.checked.load(Ordering::Relaxed);
    if shared.abort.load(Ordering::Relaxed) && !shared.found.load(Ordering::Relaxed) {
        return Err(Error::Timeout {
            best_lower: r,
            labelings_tested: *tested,
            failure_proofs: (1..r).collect(),
        });
    }
    Ok(shared.witness.into_inner().expect("no poisoned lock"))
}

struct SweepShared {
    found: AtomicBool,
    abort: AtomicBool,
    tested: AtomicU64,
    checked: AtomicU64,
    witness: Mutex<Option<Vec<usize>>>,
    start: Instant,
    max_tested: u64,
    budget_ms: u64,
}

fn sweep_rec(
    action: &Action,
    r: usize,
    shared: &SweepShared,
    labels: &mut [usize],
    pos: usize,
    maxl: usize,
) {
    if shared.found.load(Ordering::Relaxed) || shared.abort.load(Ordering::Relaxed) {
        return;
    }
    let m = action.points;
    if pos == m {
        if maxl != r {
            return;
        }
        if !lex_min_under(action, labels) {
            return;
        }
        let t = shared.tested.fetch_add(1, Ordering::Relaxed) + 1;
        if t > shared.max_tested
            || (t.is_multiple_of(256)
                && shared.start.elapsed().as_millis() as u64 > shared.budget_ms)
        {
            shared.abort.store(true, Ordering::Relaxed);
            return;
        }
        let (ok, scanned) = action.is_distinguishing(labels);
        shared.checked.fetch_add(scanned, Ordering::Relaxed);
        if ok {
            let mut slot = shared.witness.lock().expect("no poisoned lock");
            let better = match slot.as_ref() {
                Some(existing) => labels[..] < existing[..],
                None => true,
            };
            if better {
                *slot = Some(labels.to_vec());
            }
            shared.found.store(true, Ordering::Relaxed);
        }
        return;
    }
    // pruning: remaining positions must still be able to reach label r
    let remaining = m - pos;
    let lo_needed = r.saturating_sub(maxl);
    if lo_needed > remaining {
        return;
    }
    let hi = (maxl + 1).min(r);
    for l in 1..=hi {
        labels[pos] = l;
        sweep_rec(action, r, shared, labels, pos + 1, maxl.max(l));
    }
}

/// True when no pruning permutation maps `labels` to something
/// lexicographically smaller after restricted-growth renaming.
fn lex_min_under(action: &Action, labels: &[usize]) -> bool {
    let m = action.points;
    let mut rename = vec![0usize; m + 2];
    for p in &action.prune {
        rename.iter_mut().for_each(|x| *x = 0);
        let mut next = 0usize;
        let mut smaller = false;
        for i in 0..m {
            let raw = labels[p[i]];
            if rename[raw] == 0 {
                next += 1;
                rename[raw] = next;
            }
            let v = rename[raw];
            if v != labels[i] {
                smaller = v < labels[i];
                break;
            }
        }
        if smaller {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub kind: LabelKind,
    pub claimed: usize,
    /// The witness verifies as distinguishing (proves D ≤ claimed).
    pub upper_bound_certified: bool,
    /// Exhaustive failure at claimed−1 completed within budget
    /// (proves D > claimed−1).
    pub lower_bound_certified: bool,
    pub labelings_tested: u64,
}

/// One-sided certification of a claimed value: the witness proves the
/// upper bound, an exhaustive sweep at `claimed - 1` proves the lower.
pub fn verify_claimed_value(
    g: &Graph,
    kind: LabelKind,
    claimed: usize,
    witness: &[usize],
    opts: &SearchOptions,
) -> Result<VerifyReport> {
    if claimed == 0 {
        return Err(Error::InvalidParameter("claimed value must be >= 1".into()));
    }
    let group = aut::enumerate_automorphisms(g, opts.group_cap)?;
    let (expected_len, action) = match kind {
        LabelKind::Vertex => {
            let perms = group.non_identity().map(|p| p.image().to_vec()).collect();
            (g.vertex_count(), Action::new(g.vertex_count(), perms))
        }
        LabelKind::Edge => {
            let mut set = std::collections::BTreeSet::new();
            for p in group.non_identity() {
                set.insert(induced_edge_permutation(g, p)?);
            }
            let identity: Vec<usize> = (0..g.edge_count()).collect();
            set.remove(&identity);
            (g.edge_count(), Action::new(g.edge_count(), set.into_iter().collect()))
        }
    };
    validate_labels(witness, expected_len)?;
    if max_label(witness) > claimed {
        return Err(Error::InvalidParameter(
            "witness uses more labels than claimed".into(),
        ));
    }
    if kind == LabelKind::Edge && aut::edge_kernel_is_nontrivial(g, &group) {
        return Err(Error::InvalidWitness);
    }
    let (upper, scanned) = action.is_distinguishing(witness);
    if !upper {
        return Err(Error::InvalidWitness);
    }
    let mut tested = 0u64;
    let mut checked = scanned;
    // r = 1 fails exactly when the group is nontrivial; sweep the rest.
    let mut lower = claimed == 1 || !action.perms.is_empty();
    let start = Instant::now();
    for r in 2..claimed {
        if !lower {
            break;
        }
        match sweep(&action, r, opts, start, &mut tested, &mut checked) {
            Ok(None) => {}
            Ok(Some(_)) => lower = false,
            Err(Error::Timeout { .. }) => lower = false,
            Err(e) => return Err(e),
        }
    }
    Ok(VerifyReport {
        kind,
        claimed,
        upper_bound_certified: true,
        lower_bound_certified: lower,
        labelings_tested: tested,
    })
}
