//! Membership in B_h and B_{h,k}, violation witnesses, double
//! representations and their reductions.

use std::collections::HashSet;
use std::fmt;

use crate::combinat::{sorted_overlap, sum_buckets, GroundSet, HMultiset, Limits};
use crate::error::{usage, Error, Result};
use crate::group::{AmbientGroup, Element};

/// Two inequivalent multisets of the same length with the same sum.
///
/// Without a tracked element the lexicographically smaller side is `left`.
/// With a tracked element `x`, `left` is the side holding more copies of `x`
/// and `external_multiplicity` counts them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleRepresentation {
    left: HMultiset,
    right: HMultiset,
    external: Option<Element>,
    external_multiplicity: usize,
}

impl DoubleRepresentation {
    pub fn new(group: AmbientGroup, left: Vec<Element>, right: Vec<Element>) -> Result<Self> {
        if left.len() != right.len() {
            return Err(usage(format!(
                "sides have different lengths {} and {}",
                left.len(),
                right.len()
            )));
        }
        let left = HMultiset::new(group, left)?;
        let right = HMultiset::new(group, right)?;
        Self::from_multisets(left, right)
    }

    pub(crate) fn from_multisets(left: HMultiset, right: HMultiset) -> Result<Self> {
        if left.sum() != right.sum() {
            return Err(usage(format!(
                "sides have different sums {} and {}",
                left.sum(),
                right.sum()
            )));
        }
        if left == right {
            return Err(usage(format!("sides {left} and {right} are equivalent")));
        }
        let (left, right) = if left <= right {
            (left, right)
        } else {
            (right, left)
        };
        Ok(DoubleRepresentation {
            left,
            right,
            external: None,
            external_multiplicity: 0,
        })
    }

    /// Tracks `x`: orients the representation so that the side with more
    /// copies of `x` is on the left.
    pub fn tracking(mut self, x: Element) -> Self {
        let (l, r) = (self.left.multiplicity(x), self.right.multiplicity(x));
        if r > l {
            std::mem::swap(&mut self.left, &mut self.right);
        }
        self.external = Some(x);
        self.external_multiplicity = l.max(r);
        self
    }

    pub fn left(&self) -> &HMultiset {
        &self.left
    }

    pub fn right(&self) -> &HMultiset {
        &self.right
    }

    pub fn length(&self) -> usize {
        self.left.len()
    }

    pub fn sum(&self) -> Element {
        self.left.sum()
    }

    pub fn overlap(&self) -> usize {
        sorted_overlap(self.left.entries(), self.right.entries())
    }

    /// No element appears on both sides.
    pub fn is_proper(&self) -> bool {
        self.overlap() == 0
    }

    pub fn external(&self) -> Option<Element> {
        self.external
    }

    pub fn external_multiplicity(&self) -> usize {
        self.external_multiplicity
    }

    /// Distinct elements occurring on either side.
    pub fn support(&self) -> Vec<Element> {
        let mut v: Vec<Element> = self
            .left
            .entries()
            .iter()
            .chain(self.right.entries())
            .copied()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Display for DoubleRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.left, self.right)
    }
}

/// Certificate that a set is not B_{h,k}: an equal-sum pair of h-multisets
/// sharing fewer than `k` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhkWitness {
    rep: DoubleRepresentation,
    k: usize,
}

impl BhkWitness {
    pub fn representation(&self) -> &DoubleRepresentation {
        &self.rep
    }

    pub fn order(&self) -> usize {
        self.rep.length()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn overlap(&self) -> usize {
        self.rep.overlap()
    }

    /// Re-checks the certificate from scratch against a set.
    pub fn certifies(&self, a: &GroundSet) -> bool {
        let g = a.group();
        let left = self.rep.left.entries();
        let right = self.rep.right.entries();
        let in_set = left.iter().chain(right).all(|&e| a.contains(e));
        in_set
            && left.len() == right.len()
            && g.sum(left).ok() == g.sum(right).ok()
            && left != right
            && sorted_overlap(left, right) < self.k
    }
}

impl fmt::Display for BhkWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (shared summands {} < {})",
            self.rep,
            self.overlap(),
            self.k
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember(BhkWitness),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }

    pub fn witness(&self) -> Option<&BhkWitness> {
        match self {
            Membership::Member => None,
            Membership::NotMember(w) => Some(w),
        }
    }
}

/// Whether `A` is a Sidon set of order `h`.
pub fn is_bh(a: &GroundSet, h: usize, limits: &Limits) -> Result<Membership> {
    is_bhk(a, h, h, limits)
}

/// Whether `A` is a generalized Sidon set of order `(h, k)`: every two
/// equal-sum h-multisets over `A` share at least `k` entries.
///
/// On failure the witness has minimal overlap, ties broken by the
/// lexicographic order of `(left, right)`.
pub fn is_bhk(a: &GroundSet, h: usize, k: usize, limits: &Limits) -> Result<Membership> {
    if k == 0 || k > h {
        return Err(usage(format!("need 1 <= k <= h, got h = {h}, k = {k}")));
    }
    let buckets = sum_buckets(a, h, limits)?;
    let mut best: Option<(usize, &HMultiset, &HMultiset)> = None;
    for (_, bucket) in buckets.iter() {
        for (i, s) in bucket.iter().enumerate() {
            for t in &bucket[i + 1..] {
                let ov = sorted_overlap(s.entries(), t.entries());
                if ov >= k {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bo, bs, bt)) => (ov, s, t) < (bo, bs, bt),
                };
                if better {
                    best = Some((ov, s, t));
                }
            }
        }
    }
    Ok(match best {
        None => Membership::Member,
        Some((_, s, t)) => Membership::NotMember(BhkWitness {
            rep: DoubleRepresentation::from_multisets(s.clone(), t.clone())?,
            k,
        }),
    })
}

/// The largest `k` with `A` in B_{h,k}: the minimal overlap over all pairs
/// of distinct equal-sum h-multisets, `h` when there are none, and 0 when
/// some pair is disjoint.
pub fn classify_max_k(a: &GroundSet, h: usize, limits: &Limits) -> Result<usize> {
    if h == 0 {
        return Err(usage("h must be at least 1"));
    }
    let buckets = sum_buckets(a, h, limits)?;
    let mut min = h;
    for (_, bucket) in buckets.iter() {
        for (i, s) in bucket.iter().enumerate() {
            for t in &bucket[i + 1..] {
                min = min.min(sorted_overlap(s.entries(), t.entries()));
                if min == 0 {
                    return Ok(0);
                }
            }
        }
    }
    Ok(min)
}

/// Quick B_h test over raw elements with no witness: stops at the first
/// repeated h-fold sum.
pub(crate) fn has_unique_h_sums(group: AmbientGroup, elems: &[Element], h: usize) -> Result<bool> {
    let mut seen = HashSet::new();
    crate::combinat::scan_h_sums(group, elems, h, |s| seen.insert(s))
}

fn multiset_difference(a: &[Element], b: &[Element]) -> Vec<Element> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j < b.len() && b[j] == x {
            j += 1;
        } else {
            out.push(x);
        }
    }
    out
}

fn merge_sorted(a: &[Element], b: &[Element]) -> Vec<Element> {
    let mut v: Vec<Element> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// Cancels the entries the two sides share, yielding the unique proper
/// double representation it reduces to. A tracked element stays tracked.
pub fn reduce_to_proper(
    d: &DoubleRepresentation,
    group: AmbientGroup,
) -> Result<DoubleRepresentation> {
    let l = multiset_difference(d.left.entries(), d.right.entries());
    let r = multiset_difference(d.right.entries(), d.left.entries());
    let reduced = DoubleRepresentation::new(group, l, r)?;
    Ok(match d.external {
        Some(x) => reduced.tracking(x),
        None => reduced,
    })
}

/// Every proper double representation over `A` of length at most `max_len`,
/// each listed once, sorted by length and then by `(left, right)`.
pub fn find_proper_double_representations(
    a: &GroundSet,
    max_len: usize,
    limits: &Limits,
) -> Result<Vec<DoubleRepresentation>> {
    if max_len == 0 {
        return Err(usage("max_len must be at least 1"));
    }
    let mut out = Vec::new();
    for len in 1..=max_len {
        let buckets = sum_buckets(a, len, limits)?;
        for (_, bucket) in buckets.iter() {
            for (i, s) in bucket.iter().enumerate() {
                for t in &bucket[i + 1..] {
                    if sorted_overlap(s.entries(), t.entries()) == 0 {
                        out.push(DoubleRepresentation::from_multisets(s.clone(), t.clone())?);
                    }
                }
            }
        }
    }
    out.sort_by(|p, q| (p.length(), &p.left, &p.right).cmp(&(q.length(), &q.left, &q.right)));
    Ok(out)
}

/// Combines `u x + a_1 + ... = a'_1 + ...` with `w x + b_1 + ... = b'_1 + ...`
/// (`u < w`, `x` absent from both right sides) by adding the first to the
/// swapped second and cancelling common terms. The result is proper and
/// carries `x` exactly `w - u` times on its left.
pub fn subtraction_algorithm(
    d1: &DoubleRepresentation,
    d2: &DoubleRepresentation,
    x: Element,
    group: AmbientGroup,
) -> Result<DoubleRepresentation> {
    if d1.length() != d2.length() {
        return Err(usage("representations must have the same length"));
    }
    for (name, d) in [("first", d1), ("second", d2)] {
        if !d.is_proper() {
            return Err(usage(format!("{name} representation {d} is not proper")));
        }
    }
    let d1 = d1.clone().tracking(x);
    let d2 = d2.clone().tracking(x);
    let (u, w) = (d1.external_multiplicity, d2.external_multiplicity);
    if u == 0 || u >= w {
        return Err(usage(format!(
            "need 1 <= u < w for the multiplicities of {x}, got u = {u}, w = {w}"
        )));
    }
    let lhs = merge_sorted(d1.left.entries(), d2.right.entries());
    let rhs = merge_sorted(d1.right.entries(), d2.left.entries());
    let l = multiset_difference(&lhs, &rhs);
    let r = multiset_difference(&rhs, &lhs);
    let out = DoubleRepresentation::new(group, l, r)?.tracking(x);
    if out.external_multiplicity != w - u || out.right.multiplicity(x) != 0 {
        return Err(Error::Integrity(format!(
            "subtraction produced {out} with multiplicity {} of {x}, expected {}",
            out.external_multiplicity,
            w - u
        )));
    }
    Ok(out)
}

/// `A ∪ {b}` for an integer set `A` in B_{h,k} \ B_{h,k+1} with
/// `1 <= k < h/2`, `b > h max(A)` and `A` nonnegative. The result stays in
/// B_{h,k} \ B_{h,k+1}.
pub fn extend_bhk(
    a: &GroundSet,
    h: usize,
    k: usize,
    b: Element,
    limits: &Limits,
) -> Result<GroundSet> {
    if a.group() != AmbientGroup::Integers {
        return Err(usage(
            "extension needs the integers: the argument uses their order",
        ));
    }
    if k == 0 || 2 * k >= h {
        return Err(usage(format!("need 1 <= k < h/2, got h = {h}, k = {k}")));
    }
    let Some(max) = a.max() else {
        return Err(usage("extension needs a nonempty set"));
    };
    if a.elements()[0].value() < 0 {
        return Err(usage("extension needs a set of nonnegative integers"));
    }
    if !is_bhk(a, h, k, limits)?.is_member() {
        return Err(usage(format!("{a} is not a B_{{{h},{k}}} set")));
    }
    if is_bhk(a, h, k + 1, limits)?.is_member() {
        return Err(usage(format!("{a} is a B_{{{h},{}}} set", k + 1)));
    }
    let bound = a.group().scale(h as u64, max)?;
    if b <= bound {
        return Err(usage(format!("need b > h max(A) = {bound}, got b = {b}")));
    }
    Ok(a.with(b))
}
