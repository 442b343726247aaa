//! Exact dynamic programming over part counts.
//!
//! `P_{n,k}` is the weighted number of compositions of `n` with exactly `k`
//! parts, satisfying `P_{0,0} = 1` and `P_{n,k} = sum_j p_j P_{n-j,k-1}`.
//! From the per-`k` rows this module derives the diagonal count
//! `D_n(m) = sum_k prod_i P^(i)_{n,k}` over `m`-tuples of part sets, the
//! probability `pi_n = D_n / prod_i P^(i)_n`, the exact distribution of the
//! number of parts, and the count of tuples with weakly decreasing part
//! counts.
//!
//! The recurrence runs on unsigned big integers, not rationals: with
//! `q` the lcm of the weight denominators, `Q_{n,k} = P_{n,k} q^k` is an
//! integer and obeys the same recurrence with weights `w_j q`. Rational
//! per-operation normalization on thousand-bit values is what dominates
//! otherwise; rationals appear only when a row is handed out. Rolling
//! windows keep just the rows the recurrence still needs, so single-row
//! queries at large `n` stay in O(window) memory; full tables exist only
//! behind the memoized `part_count_table`.
//!
//! The unbounded families are arithmetic progressions `first, first+step,
//! ...`, so their inner sum over parts collapses to one lookup in a running
//! prefix row `A_{t,k} = P_{t,k} + A_{t-step,k}`; each table entry costs
//! O(1) big-number additions instead of O(n).

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partset::PartSet;

/// Capacity and zero-part policy for enumeration calls.
#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Hard ceiling on any requested `n`.
    pub n_max_cap: u64,
    /// Permit part sets containing 0 in `equal_parts_count` (the diagonal
    /// stays finite as long as one coordinate bounds the number of parts).
    pub allow_zero_parts: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            n_max_cap: 10_000,
            allow_zero_parts: false,
        }
    }
}

/// One row `(P_{n,k})_k`, stored densely from `k_min`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    n: u64,
    k_min: u64,
    vals: Vec<BigRational>,
}

impl Row {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k_min(&self) -> u64 {
        self.k_min
    }

    /// Largest `k` with a stored entry (entries may still be zero).
    pub fn k_max(&self) -> u64 {
        assert!(!self.vals.is_empty(), "empty row has no k range");
        self.k_min + self.vals.len() as u64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn get_ref(&self, k: u64) -> Option<&BigRational> {
        if k < self.k_min {
            return None;
        }
        self.vals.get((k - self.k_min) as usize)
    }

    /// `P_{n,k}`, zero outside the stored range.
    pub fn get(&self, k: u64) -> BigRational {
        self.get_ref(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Row sum `P_n`.
    pub fn total(&self) -> BigRational {
        self.vals.iter().sum()
    }

    /// `(k, P_{n,k})` over nonzero entries.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.vals
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (self.k_min + i as u64, v))
    }
}

/// Exact table of `P_{n,k}` for `n <= n_max`, with row totals.
#[derive(Debug, Clone)]
pub struct CountTable {
    part_set: PartSet,
    n_max: u64,
    rows: Vec<Row>,
    totals: Vec<BigRational>,
}

impl CountTable {
    pub fn part_set(&self) -> &PartSet {
        &self.part_set
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn row(&self, n: u64) -> &Row {
        assert!(n <= self.n_max, "row {n} beyond table size {}", self.n_max);
        &self.rows[n as usize]
    }

    /// `P_{n,k}`.
    pub fn count(&self, n: u64, k: u64) -> BigRational {
        self.row(n).get(k)
    }

    /// `P_n`.
    pub fn total(&self, n: u64) -> &BigRational {
        assert!(n <= self.n_max, "total {n} beyond table size {}", self.n_max);
        &self.totals[n as usize]
    }
}

/// Exact distribution of the number of parts `X_n`.
#[derive(Debug, Clone)]
pub struct PartsDistribution {
    pub n: u64,
    pub pmf: BTreeMap<u64, BigRational>,
    pub mean: BigRational,
    pub variance: BigRational,
}

/// Result of a diagonal count or probability over an m-tuple of part sets.
#[derive(Debug, Clone)]
pub struct EqualTupleResult {
    pub tuple: Vec<PartSet>,
    pub n: u64,
    /// `D_n = sum_k prod_i P^(i)_{n,k}`.
    pub d_n: BigRational,
    /// `D_n / prod_i P^(i)_n`, when requested and defined.
    pub pi_n: Option<BigRational>,
}

/// Scaled row `(Q_{n,k})_k = (P_{n,k} q^k)_k`, all entries integers.
#[derive(Debug, Clone)]
struct WorkRow {
    n: u64,
    k_min: u64,
    vals: Vec<BigUint>,
}

impl WorkRow {
    fn empty(n: u64) -> WorkRow {
        WorkRow {
            n,
            k_min: 0,
            vals: Vec::new(),
        }
    }

    fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    fn k_max(&self) -> u64 {
        debug_assert!(!self.vals.is_empty());
        self.k_min + self.vals.len() as u64 - 1
    }

    fn get_ref(&self, k: u64) -> Option<&BigUint> {
        if k < self.k_min {
            return None;
        }
        self.vals.get((k - self.k_min) as usize)
    }
}

/// A part set with weights cleared to integers: `q` is the lcm of the
/// weight denominators and every stored weight is `w q`.
struct ScaledSet {
    scale: BigUint,
    zero_w: Option<BigUint>,
    kind: ScaledKind,
}

enum ScaledKind {
    Finite(Vec<(u64, BigUint)>),
    Family { first: u64, step: u64 },
}

fn scale_weight(w: &BigRational, q: &BigUint) -> BigUint {
    let num = w.numer().to_biguint().expect("weights are nonnegative");
    let den = w.denom().to_biguint().expect("denominators are positive");
    num * q / den
}

fn scaled_set(set: &PartSet) -> ScaledSet {
    let mut scale = BigUint::one();
    let mut denominators = Vec::new();
    if let Some(w0) = set.zero_weight() {
        denominators.push(w0.denom().to_biguint().unwrap());
    }
    if let Some(parts) = set.finite_positive_parts() {
        for (_, w) in &parts {
            denominators.push(w.denom().to_biguint().unwrap());
        }
        for den in &denominators {
            scale = scale.lcm(den);
        }
        let kind = ScaledKind::Finite(
            parts
                .iter()
                .map(|(j, w)| (*j, scale_weight(w, &scale)))
                .collect(),
        );
        let zero_w = set.zero_weight().map(|w| scale_weight(&w, &scale));
        return ScaledSet {
            scale,
            zero_w,
            kind,
        };
    }
    // families carry unit weights
    let (first, step) = set
        .positive_progression()
        .expect("non-finite sets are progressions");
    ScaledSet {
        scale,
        zero_w: set.zero_weight().map(|w| {
            debug_assert!(w.is_one());
            BigUint::one()
        }),
        kind: ScaledKind::Family { first, step },
    }
}

/// Inclusive `k` bounds of row `t`; `None` when the row has no entries.
fn k_bounds(set: &PartSet, t: u64, k_cap: Option<u64>) -> Option<(u64, u64)> {
    if t == 0 {
        // only the empty composition, plus padding when part 0 exists
        return match (set.has_zero_part(), k_cap) {
            (true, Some(cap)) => Some((0, cap)),
            (true, None) => unreachable!("zero-part rows require a k cap"),
            _ => Some((0, 0)),
        };
    }
    let a = set.min_positive_part();
    let lo = match set.max_part() {
        Some(b) => t.div_ceil(b),
        None => 1,
    };
    let hi = if set.has_zero_part() {
        k_cap.expect("zero-part rows require a k cap")
    } else {
        let natural = t / a;
        k_cap.map_or(natural, |cap| natural.min(cap))
    };
    if lo > hi {
        return None;
    }
    Some((lo, hi))
}

/// Row consumers: either every row is kept (full table) or only a window
/// deep enough for the recurrence.
trait RowStore {
    fn push(&mut self, row: WorkRow);
    fn get(&self, n: u64) -> &WorkRow;
}

struct FullStore {
    rows: Vec<WorkRow>,
}

impl RowStore for FullStore {
    fn push(&mut self, row: WorkRow) {
        debug_assert_eq!(row.n as usize, self.rows.len());
        self.rows.push(row);
    }
    fn get(&self, n: u64) -> &WorkRow {
        &self.rows[n as usize]
    }
}

struct WindowStore {
    rows: VecDeque<WorkRow>,
    next_n: u64,
    depth: usize,
}

impl WindowStore {
    fn new(depth: usize) -> Self {
        WindowStore {
            rows: VecDeque::with_capacity(depth + 1),
            next_n: 0,
            depth: depth.max(1),
        }
    }
    fn last(&self) -> &WorkRow {
        self.rows.back().expect("window is never empty after a push")
    }
}

impl RowStore for WindowStore {
    fn push(&mut self, row: WorkRow) {
        debug_assert_eq!(row.n, self.next_n);
        if self.rows.len() == self.depth {
            self.rows.pop_front();
        }
        self.rows.push_back(row);
        self.next_n += 1;
    }
    fn get(&self, n: u64) -> &WorkRow {
        let base = self.next_n - self.rows.len() as u64;
        &self.rows[(n - base) as usize]
    }
}

/// Run the recurrence from row 0 through row `n_max`, feeding every row to
/// the store.
fn run_dp<S: RowStore>(
    set: &PartSet,
    scaled: &ScaledSet,
    n_max: u64,
    k_cap: Option<u64>,
    store: &mut S,
) {
    let (lo0, hi0) = k_bounds(set, 0, k_cap).expect("row 0 is never empty");
    let mut row0 = WorkRow {
        n: 0,
        k_min: lo0,
        vals: Vec::with_capacity((hi0 - lo0 + 1) as usize),
    };
    row0.vals.push(BigUint::one());
    if let Some(w0) = &scaled.zero_w {
        for k in 1..=hi0 {
            let prev = &row0.vals[(k - 1) as usize];
            row0.vals.push(prev * w0);
        }
    }
    store.push(row0);

    match &scaled.kind {
        ScaledKind::Finite(parts) => {
            for t in 1..=n_max {
                let row = match k_bounds(set, t, k_cap) {
                    None => WorkRow::empty(t),
                    Some((lo, hi)) => {
                        let mut vals = Vec::with_capacity((hi - lo + 1) as usize);
                        for k in lo..=hi {
                            let mut acc = BigUint::zero();
                            for (j, w) in parts {
                                if t >= *j {
                                    if let Some(prev) = store.get(t - j).get_ref(k - 1) {
                                        if w.is_one() {
                                            acc += prev;
                                        } else {
                                            acc += prev * w;
                                        }
                                    }
                                }
                            }
                            if let Some(w0) = &scaled.zero_w {
                                if k > lo {
                                    let prev = &vals[(k - 1 - lo) as usize];
                                    if w0.is_one() {
                                        acc += prev;
                                    } else {
                                        acc += prev * w0;
                                    }
                                }
                            }
                            vals.push(acc);
                        }
                        WorkRow { n: t, k_min: lo, vals }
                    }
                };
                store.push(row);
            }
        }
        ScaledKind::Family { first, step } => {
            let (first, step) = (*first, *step);
            // prefix rows A_{t,k} = P_{t,k} + A_{t-step,k}; the part sum
            // for row t is one lookup at A_{t-first,k-1}
            let a_depth = first.max(step) as usize;
            let mut a_rows: VecDeque<WorkRow> = VecDeque::with_capacity(a_depth + 1);
            let mut a_base = 0u64;
            // A row 0 equals P row 0
            a_rows.push_back(store.get(0).clone());
            for t in 1..=n_max {
                let row = match k_bounds(set, t, k_cap) {
                    None => WorkRow::empty(t),
                    Some((lo, hi)) => {
                        let mut vals = Vec::with_capacity((hi - lo + 1) as usize);
                        for k in lo..=hi {
                            let mut acc = BigUint::zero();
                            if t >= first {
                                let a_row = &a_rows[(t - first - a_base) as usize];
                                if let Some(prev) = a_row.get_ref(k - 1) {
                                    acc += prev;
                                }
                            }
                            if let Some(w0) = &scaled.zero_w {
                                if k > lo {
                                    let prev = &vals[(k - 1 - lo) as usize];
                                    if w0.is_one() {
                                        acc += prev;
                                    } else {
                                        acc += prev * w0;
                                    }
                                }
                            }
                            vals.push(acc);
                        }
                        WorkRow { n: t, k_min: lo, vals }
                    }
                };
                // extend the prefix row before the P row moves into the store
                let a_row = {
                    let k_hi = if row.is_empty() { 0 } else { row.k_max() };
                    let prev_a = if t >= step {
                        Some(&a_rows[(t - step - a_base) as usize])
                    } else {
                        None
                    };
                    let prev_hi = prev_a.map_or(0, |r| if r.is_empty() { 0 } else { r.k_max() });
                    let hi = k_hi.max(prev_hi);
                    let mut vals = Vec::with_capacity(hi as usize + 1);
                    for k in 0..=hi {
                        let mut acc = row
                            .get_ref(k)
                            .cloned()
                            .unwrap_or_else(BigUint::zero);
                        if let Some(prev) = prev_a {
                            if let Some(v) = prev.get_ref(k) {
                                acc += v;
                            }
                        }
                        vals.push(acc);
                    }
                    WorkRow { n: t, k_min: 0, vals }
                };
                if a_rows.len() > a_depth {
                    a_rows.pop_front();
                    a_base += 1;
                }
                a_rows.push_back(a_row);
                store.push(row);
            }
        }
    }
}

/// Divide the scaled entries back: `P_{n,k} = Q_{n,k} / q^k`.
fn to_rational_row(work: &WorkRow, scale: &BigUint) -> Row {
    let vals = if scale.is_one() {
        work.vals
            .iter()
            .map(|v| BigRational::from_integer(v.clone().into()))
            .collect()
    } else {
        let mut qk = num_traits::pow(scale.clone(), work.k_min as usize);
        let mut vals = Vec::with_capacity(work.vals.len());
        for v in &work.vals {
            vals.push(BigRational::new(
                v.clone().into(),
                BigInt::from(qk.clone()),
            ));
            qk *= scale;
        }
        vals
    };
    Row {
        n: work.n,
        k_min: work.k_min,
        vals,
    }
}

/// `P_n = sum_k Q_{n,k} / q^k`, over the common denominator `q^{k_max}`.
fn work_row_total(work: &WorkRow, scale: &BigUint) -> BigRational {
    if work.is_empty() {
        return BigRational::zero();
    }
    if scale.is_one() {
        let sum = work
            .vals
            .iter()
            .fold(BigUint::zero(), |acc, v| acc + v);
        return BigRational::from_integer(sum.into());
    }
    let mut num = BigUint::zero();
    let mut f = BigUint::one();
    for v in work.vals.iter().rev() {
        num += v * &f;
        f *= scale;
    }
    let den = num_traits::pow(scale.clone(), work.k_max() as usize);
    BigRational::new(num.into(), BigInt::from(den))
}

/// Build a complete scaled table and convert it once at the end.
fn build_full(set: &PartSet, n_max: u64) -> CountTable {
    debug_assert!(!set.has_zero_part());
    let scaled = scaled_set(set);
    let mut store = FullStore {
        rows: Vec::with_capacity(n_max as usize + 1),
    };
    run_dp(set, &scaled, n_max, None, &mut store);
    let rows: Vec<Row> = store
        .rows
        .iter()
        .map(|work| to_rational_row(work, &scaled.scale))
        .collect();
    let totals = rows.iter().map(Row::total).collect();
    CountTable {
        part_set: set.clone(),
        n_max,
        rows,
        totals,
    }
}

/// Compute only row `n`, keeping a window of the depth the recurrence needs.
fn build_final_work_row(set: &PartSet, scaled: &ScaledSet, n: u64, k_cap: Option<u64>) -> WorkRow {
    let depth = match set.max_part() {
        Some(b) => b as usize,
        None => 1,
    };
    let mut store = WindowStore::new(depth);
    run_dp(set, scaled, n, k_cap, &mut store);
    store.last().clone()
}

static TABLE_CACHE: LazyLock<Mutex<HashMap<String, Arc<CountTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn check_cap(n: u64, opts: &EnumerateOptions) -> Result<()> {
    if n > opts.n_max_cap {
        return Err(Error::CapacityExceeded {
            requested: n,
            cap: opts.n_max_cap,
        });
    }
    Ok(())
}

/// The memoized table for `set` covering at least `n_max` (it may cover
/// more: cached tables grow by doubling).
pub fn part_count_table(set: &PartSet, n_max: u64) -> Result<Arc<CountTable>> {
    part_count_table_with(set, n_max, &EnumerateOptions::default())
}

pub fn part_count_table_with(
    set: &PartSet,
    n_max: u64,
    opts: &EnumerateOptions,
) -> Result<Arc<CountTable>> {
    check_cap(n_max, opts)?;
    if set.has_zero_part() {
        return Err(Error::ZeroPart);
    }
    let key = set.to_string();
    let cached_size = {
        let cache = TABLE_CACHE.lock().unwrap();
        match cache.get(&key) {
            Some(table) if table.n_max >= n_max => return Ok(Arc::clone(table)),
            Some(table) => Some(table.n_max),
            None => None,
        }
    };
    let build_size = match cached_size {
        Some(old) => n_max.max((2 * old).min(opts.n_max_cap)),
        None => n_max,
    };
    let table = Arc::new(build_full(set, build_size));
    let mut cache = TABLE_CACHE.lock().unwrap();
    let entry = cache.entry(key).or_insert_with(|| Arc::clone(&table));
    if entry.n_max < table.n_max {
        *entry = Arc::clone(&table);
    }
    Ok(Arc::clone(entry))
}

/// Scaled row `n` for every distinct coordinate, keyed by canonical spec
/// string and paired with the coordinate's scale `q`.
fn coordinate_rows(
    tuple: &[PartSet],
    n: u64,
    k_cap: Option<u64>,
) -> HashMap<String, (WorkRow, BigUint)> {
    let mut rows = HashMap::new();
    for set in tuple {
        let key = set.to_string();
        if rows.contains_key(&key) {
            continue;
        }
        let scaled = scaled_set(set);
        let row = build_final_work_row(set, &scaled, n, k_cap);
        rows.insert(key, (row, scaled.scale));
    }
    rows
}

/// `D_n = sum_k prod_i P^(i)_{n,k}` over the tuple's shared `k` range,
/// evaluated as `(sum_k prod_i Q^(i)_{n,k} r^{hi-k}) / r^{hi}` with
/// `r = prod_i q_i`.
fn diagonal_sum(
    tuple: &[PartSet],
    rows: &HashMap<String, (WorkRow, BigUint)>,
    k_cap: Option<u64>,
) -> BigRational {
    let coords: Vec<&(WorkRow, BigUint)> =
        tuple.iter().map(|set| &rows[&set.to_string()]).collect();
    if coords.iter().any(|(row, _)| row.is_empty()) {
        return BigRational::zero();
    }
    let lo = coords.iter().map(|(row, _)| row.k_min).max().unwrap();
    let mut hi = coords.iter().map(|(row, _)| row.k_max()).min().unwrap();
    if let Some(cap) = k_cap {
        hi = hi.min(cap);
    }
    if lo > hi {
        return BigRational::zero();
    }
    let r = coords
        .iter()
        .fold(BigUint::one(), |acc, (_, q)| acc * q);
    let mut num = BigUint::zero();
    let mut f = BigUint::one();
    for k in (lo..=hi).rev() {
        let mut product: Option<BigUint> = Some(BigUint::one());
        for (row, _) in &coords {
            match row.get_ref(k) {
                Some(v) if !v.is_zero() => {
                    product = product.map(|acc| acc * v);
                }
                _ => {
                    product = None;
                    break;
                }
            }
        }
        if let Some(p) = product {
            num += p * &f;
        }
        f *= &r;
    }
    if num.is_zero() {
        return BigRational::zero();
    }
    if r.is_one() {
        BigRational::from_integer(num.into())
    } else {
        let den = num_traits::pow(r, hi as usize);
        BigRational::new(num.into(), BigInt::from(den))
    }
}

/// Exact count of m-tuples of compositions of `n` (one per coordinate set)
/// sharing their number of parts.
pub fn equal_parts_count(tuple: &[PartSet], n: u64) -> Result<EqualTupleResult> {
    equal_parts_count_with(tuple, n, &EnumerateOptions::default())
}

pub fn equal_parts_count_with(
    tuple: &[PartSet],
    n: u64,
    opts: &EnumerateOptions,
) -> Result<EqualTupleResult> {
    assert!(!tuple.is_empty(), "tuple must have at least one coordinate");
    check_cap(n, opts)?;
    let zero_coords = tuple.iter().filter(|set| set.has_zero_part()).count();
    if zero_coords > 0 && !opts.allow_zero_parts {
        return Err(Error::ZeroPart);
    }
    let k_cap = if zero_coords > 0 {
        let bound = tuple
            .iter()
            .filter(|set| !set.has_zero_part())
            .map(|set| n / set.min_positive_part())
            .min();
        match bound {
            Some(cap) => Some(cap.max(1)),
            None => {
                return Err(Error::OutOfDomain {
                    message: "every coordinate allows part 0; the diagonal sum diverges".into(),
                })
            }
        }
    } else {
        None
    };
    let rows = coordinate_rows(tuple, n, k_cap);
    let d_n = diagonal_sum(tuple, &rows, k_cap);
    Ok(EqualTupleResult {
        tuple: tuple.to_vec(),
        n,
        d_n,
        pi_n: None,
    })
}

/// `pi_n = D_n / prod_i P^(i)_n`, exactly.
pub fn equal_parts_probability(tuple: &[PartSet], n: u64) -> Result<EqualTupleResult> {
    equal_parts_probability_with(tuple, n, &EnumerateOptions::default())
}

pub fn equal_parts_probability_with(
    tuple: &[PartSet],
    n: u64,
    opts: &EnumerateOptions,
) -> Result<EqualTupleResult> {
    assert!(!tuple.is_empty(), "tuple must have at least one coordinate");
    check_cap(n, opts)?;
    if tuple.iter().any(|set| set.has_zero_part()) {
        return Err(Error::ZeroPart);
    }
    let rows = coordinate_rows(tuple, n, None);
    let mut denom = BigRational::one();
    for (i, set) in tuple.iter().enumerate() {
        let (row, scale) = &rows[&set.to_string()];
        let total = work_row_total(row, scale);
        if total.is_zero() {
            return Err(Error::UndefinedProbability { coordinate: i, n });
        }
        denom *= total;
    }
    let d_n = diagonal_sum(tuple, &rows, None);
    let pi = &d_n / &denom;
    Ok(EqualTupleResult {
        tuple: tuple.to_vec(),
        n,
        d_n,
        pi_n: Some(pi),
    })
}

/// Exact pmf, mean and variance of the number of parts `X_n`.
pub fn parts_distribution(set: &PartSet, n: u64) -> Result<PartsDistribution> {
    parts_distribution_with(set, n, &EnumerateOptions::default())
}

pub fn parts_distribution_with(
    set: &PartSet,
    n: u64,
    opts: &EnumerateOptions,
) -> Result<PartsDistribution> {
    check_cap(n, opts)?;
    if set.has_zero_part() {
        return Err(Error::ZeroPart);
    }
    let scaled = scaled_set(set);
    let work = build_final_work_row(set, &scaled, n, None);
    let row = to_rational_row(&work, &scaled.scale);
    let total = row.total();
    if total.is_zero() {
        return Err(Error::NoCompositions { n });
    }
    let mut pmf = BTreeMap::new();
    let mut mean = BigRational::zero();
    let mut second = BigRational::zero();
    for (k, count) in row.iter_nonzero() {
        let p = count / &total;
        let k_rat = BigRational::from_integer(k.into());
        mean += &k_rat * &p;
        second += &k_rat * &k_rat * &p;
        pmf.insert(k, p);
    }
    let variance = second - &mean * &mean;
    Ok(PartsDistribution {
        n,
        pmf,
        mean,
        variance,
    })
}

/// Count of m-tuples whose part counts are weakly decreasing:
/// `sum over k_1 >= ... >= k_m of prod_i P^(i)_{n,k_i}`. For m = 1 this is
/// `P_n`.
pub fn decreasing_parts_count(tuple: &[PartSet], n: u64) -> Result<BigRational> {
    decreasing_parts_count_with(tuple, n, &EnumerateOptions::default())
}

pub fn decreasing_parts_count_with(
    tuple: &[PartSet],
    n: u64,
    opts: &EnumerateOptions,
) -> Result<BigRational> {
    assert!(!tuple.is_empty(), "tuple must have at least one coordinate");
    check_cap(n, opts)?;
    if tuple.iter().any(|set| set.has_zero_part()) {
        return Err(Error::ZeroPart);
    }
    let rows: HashMap<String, Row> = coordinate_rows(tuple, n, None)
        .into_iter()
        .map(|(key, (work, scale))| {
            let row = to_rational_row(&work, &scale);
            (key, row)
        })
        .collect();
    let k_hi = tuple
        .iter()
        .map(|set| {
            let row = &rows[&set.to_string()];
            if row.is_empty() {
                0
            } else {
                row.k_max()
            }
        })
        .max()
        .unwrap();
    // sweep coordinates right to left: after handling coordinate i,
    // layer[k] counts tuples (k_i = k >= k_{i+1} >= ... >= k_m)
    let mut layer = vec![BigRational::one(); (k_hi + 1) as usize];
    for (i, set) in tuple.iter().enumerate().rev() {
        let row = &rows[&set.to_string()];
        for k in 0..=k_hi {
            let weight = match row.get_ref(k) {
                Some(v) => v.clone(),
                None => BigRational::zero(),
            };
            layer[k as usize] = weight * &layer[k as usize];
        }
        if i > 0 {
            // prefix sums turn "k_{i} = k" into "k_{i} <= k"
            for k in 1..=k_hi as usize {
                let prev = layer[k - 1].clone();
                layer[k] += prev;
            }
        }
    }
    Ok(layer.into_iter().sum())
}

/// `P_0 .. P_{n_max}` by a univariate recurrence (prefix sums again for the
/// progression families). Used by the sampler, which needs every prefix.
pub(crate) fn totals_sequence(set: &PartSet, n_max: u64) -> Vec<BigRational> {
    debug_assert!(!set.has_zero_part());
    let mut totals: Vec<BigRational> = Vec::with_capacity(n_max as usize + 1);
    totals.push(BigRational::one());
    match set.finite_positive_parts() {
        Some(parts) => {
            for t in 1..=n_max {
                let mut acc = BigRational::zero();
                for (j, w) in &parts {
                    if t >= *j {
                        acc += &totals[(t - j) as usize] * w;
                    }
                }
                totals.push(acc);
            }
        }
        None => {
            let (first, step) = set.positive_progression().unwrap();
            let mut prefix: Vec<BigRational> = vec![BigRational::one()];
            for t in 1..=n_max {
                let p_t = if t >= first {
                    prefix[(t - first) as usize].clone()
                } else {
                    BigRational::zero()
                };
                let a_t = if t >= step {
                    &p_t + &prefix[(t - step) as usize]
                } else {
                    p_t.clone()
                };
                prefix.push(a_t);
                totals.push(p_t);
            }
        }
    }
    totals
}
