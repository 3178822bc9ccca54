//! Multisets of h elements drawn from a ground set: canonical forms, h-fold
//! sumsets, the representation function, and sum-indexed buckets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::group::{AmbientGroup, Element};

/// Guardrails for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of h-multisets materialized in one bucket index.
    pub multiset_cap: u64,
    /// Maximum ground-set size accepted by the brute-force subset scans.
    pub subset_cap: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        multiset_cap: 5_000_000,
        subset_cap: 16,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

/// `C(n, k)`, or `None` if it does not fit in a `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of h-multisets over an n-set, `C(n+h-1, h)`.
pub fn multiset_count(n: usize, h: usize) -> Option<u128> {
    if n == 0 {
        return Some(if h == 0 { 1 } else { 0 });
    }
    binomial((n + h - 1) as u64, h as u64)
}

/// A finite set of distinct elements of one ambient group, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    group: AmbientGroup,
    elements: Vec<Element>,
}

impl GroundSet {
    /// Builds a set from raw integers. Values are reduced into the group first,
    /// and a value that collides with an earlier one is rejected.
    pub fn new<I: IntoIterator<Item = i64>>(group: AmbientGroup, values: I) -> Result<Self> {
        let elements = values.into_iter().map(|v| group.element(v)).collect();
        Self::from_elements(group, elements)
    }

    pub fn from_elements(group: AmbientGroup, mut elements: Vec<Element>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|e| !group.is_canonical(**e)) {
            return Err(usage(format!(
                "{bad} is not a canonical element of {group}"
            )));
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].value()));
        }
        Ok(GroundSet { group, elements })
    }

    pub fn integers<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        Self::new(AmbientGroup::Integers, values)
    }

    pub fn empty(group: AmbientGroup) -> Self {
        GroundSet {
            group,
            elements: Vec::new(),
        }
    }

    /// `{1, 2, ..., n}` in the integers.
    pub fn interval(n: i64) -> Self {
        GroundSet {
            group: AmbientGroup::Integers,
            elements: (1..=n).map(|v| AmbientGroup::Integers.element(v)).collect(),
        }
    }

    pub fn group(&self) -> AmbientGroup {
        self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn values(&self) -> Vec<i64> {
        self.elements.iter().map(|e| e.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn max(&self) -> Option<Element> {
        self.elements.last().copied()
    }

    pub fn element(&self, value: i64) -> Element {
        self.group.element(value)
    }

    /// The subset of `self` made of `elems`; each must belong to `self`.
    pub fn subset(&self, elems: &[Element]) -> Result<GroundSet> {
        if let Some(e) = elems.iter().find(|e| !self.contains(**e)) {
            return Err(Error::NotInGround(e.value()));
        }
        GroundSet::from_elements(self.group, elems.to_vec())
    }

    pub fn with(&self, e: Element) -> GroundSet {
        let mut out = self.clone();
        if let Err(pos) = out.elements.binary_search(&e) {
            out.elements.insert(pos, e);
        }
        out
    }

    pub fn without(&self, e: Element) -> GroundSet {
        let mut out = self.clone();
        out.elements.retain(|&x| x != e);
        out
    }

    /// `x + A`.
    pub fn translate(&self, x: i64) -> Result<GroundSet> {
        let shift = self.group.element(x);
        let elems = self
            .elements
            .iter()
            .map(|&a| self.group.add(shift, a))
            .collect::<Result<Vec<_>>>()?;
        GroundSet::from_elements(self.group, elems)
    }

    /// `x - A`.
    pub fn reflect(&self, x: i64) -> Result<GroundSet> {
        let shift = self.group.element(x);
        let elems = self
            .elements
            .iter()
            .map(|&a| self.group.sub(shift, a))
            .collect::<Result<Vec<_>>>()?;
        GroundSet::from_elements(self.group, elems)
    }

    /// Ensures no sum of `h` elements can overflow the backing integer.
    pub(crate) fn check_sum_bound(&self, h: usize) -> Result<()> {
        if self.group != AmbientGroup::Integers {
            return Ok(());
        }
        let max_abs = self
            .elements
            .iter()
            .map(|e| e.value().unsigned_abs() as u128)
            .max()
            .unwrap_or(0);
        if max_abs * h as u128 > i64::MAX as u128 {
            return Err(Error::Overflow("h-fold sum"));
        }
        Ok(())
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.elements)
    }
}

pub(crate) fn write_set(f: &mut impl fmt::Write, elems: &[Element]) -> fmt::Result {
    f.write_char('{')?;
    for (i, e) in elems.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{e}")?;
    }
    f.write_char('}')
}

/// Canonical representative of an equivalence class of h-tuples: the
/// entries sorted in nondecreasing order, with the sum cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HMultiset {
    entries: Vec<Element>,
    sum: Element,
}

impl HMultiset {
    /// Canonicalizes an arbitrary tuple; any permutation yields the same value.
    pub fn new(group: AmbientGroup, mut entries: Vec<Element>) -> Result<Self> {
        if entries.is_empty() {
            return Err(usage("a multiset must have at least one entry"));
        }
        entries.sort_unstable();
        let sum = group.sum(&entries)?;
        Ok(HMultiset { entries, sum })
    }

    pub(crate) fn from_sorted(entries: Vec<Element>, sum: Element) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        HMultiset { entries, sum }
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn sum(&self) -> Element {
        self.sum
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, e: Element) -> usize {
        self.entries.iter().filter(|&&x| x == e).count()
    }
}

impl fmt::Display for HMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Size of the multiset intersection of two sorted entry lists.
pub(crate) fn sorted_overlap(a: &[Element], b: &[Element]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `sum_v min(mult_s(v), mult_t(v))`: the largest k for which k positions of
/// `t` can be matched one-to-one with equal entries of `s`.
pub fn multiset_intersection_size(s: &HMultiset, t: &HMultiset) -> Result<usize> {
    if s.len() != t.len() {
        return Err(usage(format!(
            "multisets have different lengths {} and {}",
            s.len(),
            t.len()
        )));
    }
    Ok(sorted_overlap(&s.entries, &t.entries))
}

/// Steps a nondecreasing index vector over `0..n` to its lexicographic
/// successor; returns false once exhausted.
pub(crate) fn advance_indices(idx: &mut [usize], n: usize) -> bool {
    let Some(i) = idx.iter().rposition(|&v| v + 1 < n) else {
        return false;
    };
    let next = idx[i] + 1;
    for v in &mut idx[i..] {
        *v = next;
    }
    true
}

/// Lexicographic stream of all h-multisets over a ground set.
pub struct HMultisets<'a> {
    set: &'a GroundSet,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for HMultisets<'_> {
    type Item = HMultiset;

    fn next(&mut self) -> Option<HMultiset> {
        if self.done {
            return None;
        }
        let elems = self.set.elements();
        let entries: Vec<Element> = self.idx.iter().map(|&i| elems[i]).collect();
        // the sum bound was checked when the stream was created
        let sum = self
            .set
            .group()
            .sum(&entries)
            .expect("sum bounded by check_sum_bound");
        self.done = !advance_indices(&mut self.idx, elems.len());
        Some(HMultiset::from_sorted(entries, sum))
    }
}

pub fn enumerate_h_multisets(a: &GroundSet, h: usize) -> Result<HMultisets<'_>> {
    if h == 0 {
        return Err(usage("h must be at least 1"));
    }
    a.check_sum_bound(h)?;
    Ok(HMultisets {
        set: a,
        idx: vec![0; h],
        done: a.is_empty(),
    })
}

/// Calls `f` with the sum of every h-multiset over `elems`, stopping early
/// when `f` returns false. Returns whether the scan ran to completion.
pub(crate) fn scan_h_sums(
    group: AmbientGroup,
    elems: &[Element],
    h: usize,
    mut f: impl FnMut(Element) -> bool,
) -> Result<bool> {
    if elems.is_empty() || h == 0 {
        return Ok(true);
    }
    let mut idx = vec![0usize; h];
    loop {
        let s = group.sum(idx.iter().map(|&i| &elems[i]))?;
        if !f(s) {
            return Ok(false);
        }
        if !advance_indices(&mut idx, elems.len()) {
            return Ok(true);
        }
    }
}

/// The h-fold sumset `hA`.
pub fn h_fold_sumset(a: &GroundSet, h: usize) -> Result<BTreeSet<Element>> {
    Ok(enumerate_h_multisets(a, h)?.map(|m| m.sum()).collect())
}

/// `r_{A,h}(x)`: the number of inequivalent ways to write `x` as a sum of `h`
/// elements of `A`.
pub fn representation_function(a: &GroundSet, h: usize, x: Element) -> Result<usize> {
    Ok(enumerate_h_multisets(a, h)?
        .filter(|m| m.sum() == x)
        .count())
}

/// All h-multisets over a ground set, grouped by their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumBuckets {
    h: usize,
    buckets: BTreeMap<Element, Vec<HMultiset>>,
}

impl SumBuckets {
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn get(&self, sum: Element) -> &[HMultiset] {
        self.buckets.get(&sum).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Buckets in increasing order of their sum.
    pub fn iter(&self) -> impl Iterator<Item = (Element, &[HMultiset])> {
        self.buckets.iter().map(|(s, v)| (*s, v.as_slice()))
    }

    /// Number of distinct sums.
    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn total(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }
}

pub fn sum_buckets(a: &GroundSet, h: usize, limits: &Limits) -> Result<SumBuckets> {
    if h == 0 {
        return Err(usage("h must be at least 1"));
    }
    let needed = multiset_count(a.len(), h).unwrap_or(u128::MAX);
    if needed > limits.multiset_cap as u128 {
        return Err(Error::ResourceCap {
            needed,
            cap: limits.multiset_cap as u128,
        });
    }
    let mut buckets: BTreeMap<Element, Vec<HMultiset>> = BTreeMap::new();
    for m in enumerate_h_multisets(a, h)? {
        buckets.entry(m.sum()).or_default().push(m);
    }
    Ok(SumBuckets { h, buckets })
}
