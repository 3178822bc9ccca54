//! The matroid whose independent sets are the B_h subsets of a
//! B_{2h-1,h-1} ground set, together with matroid union, covering numbers
//! and coverings by independent sets of prescribed sizes.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::combinat::{GroundSet, Limits};
use crate::error::{usage, Error, Result};
use crate::group::Element;
use crate::sidon::{
    find_proper_double_representations, has_unique_h_sums, is_bhk, DoubleRepresentation, Membership,
};

/// Ranks `rho_1 < rho_2 < ... < rho_c = |X|` of the unions of `j`
/// independent sets, one entry per `j` up to the covering number `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    rho: Vec<usize>,
}

impl RankProfile {
    pub fn ranks(&self) -> &[usize] {
        &self.rho
    }

    pub fn covering_number(&self) -> usize {
        self.rho.len()
    }

    /// `rho_j` for any `j >= 1`; constant at `|X|` past the covering number.
    pub fn rho(&self, j: usize) -> usize {
        assert!(j >= 1, "union ranks are indexed from 1");
        match self.rho.get(j - 1) {
            Some(&r) => r,
            None => self.rho.last().copied().unwrap_or(0),
        }
    }
}

/// A partition of a nonnegative integer: positive parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMu {
    parts: Vec<usize>,
}

impl PartitionMu {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(usage("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(usage(format!(
                "partition parts must be nonincreasing: {parts:?}"
            )));
        }
        Ok(PartitionMu { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `mu_1 + ... + mu_j`.
    pub fn prefix(&self, j: usize) -> usize {
        self.parts.iter().take(j).sum()
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<PartitionMu> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionMu>) {
            if rest == 0 {
                out.push(PartitionMu { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartitionMu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Why no covering with the requested part sizes exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionFailure {
    TooFewParts {
        parts: usize,
        covering_number: usize,
    },
    RankDeficit {
        j: usize,
        rho: usize,
        prefix: usize,
    },
}

impl fmt::Display for CriterionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionFailure::TooFewParts {
                parts,
                covering_number,
            } => write!(
                f,
                "r = {parts} parts is less than the covering number k = {covering_number}"
            ),
            CriterionFailure::RankDeficit { j, rho, prefix } => {
                write!(f, "rho_{j} = {rho} < mu_1 + ... + mu_{j} = {prefix}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuCovering {
    /// Pairwise disjoint independent sets, `parts[j]` of size `mu_{j+1}`.
    Covering(Vec<Vec<Element>>),
    Infeasible(CriterionFailure),
}

/// Independence oracle matroid over a ground set `X`; independent sets are
/// the B_h subsets of `X`.
#[derive(Debug, Clone)]
pub struct SidonMatroid {
    ground: GroundSet,
    order: usize,
    validated: bool,
    limits: Limits,
}

impl SidonMatroid {
    /// With `validate`, checks that `X` is a B_{2h-1,h-1} set and fails with
    /// the violation witness otherwise.
    pub fn new(ground: GroundSet, h: usize, validate: bool) -> Result<Self> {
        Self::with_limits(ground, h, validate, Limits::default())
    }

    pub fn with_limits(
        ground: GroundSet,
        h: usize,
        validate: bool,
        limits: Limits,
    ) -> Result<Self> {
        if h < 2 {
            return Err(usage(format!(
                "matroid order h must be at least 2, got {h}"
            )));
        }
        ground.check_sum_bound(2 * h - 1)?;
        if validate {
            if let Membership::NotMember(w) = is_bhk(&ground, 2 * h - 1, h - 1, &limits)? {
                return Err(Error::NotGeneralizedSidon {
                    witness: Box::new(w),
                });
            }
        }
        Ok(SidonMatroid {
            ground,
            order: h,
            validated: validate,
            limits,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(usage(
                "matroid was built without validation; greedy and union results would be unreliable",
            ))
        }
    }

    /// Sorted, duplicate-free copy of `s` after checking it lies in `X`.
    fn checked_subset(&self, s: &[Element]) -> Result<Vec<Element>> {
        Ok(self.ground.subset(s)?.elements().to_vec())
    }

    fn independent(&self, sorted: &[Element]) -> Result<bool> {
        has_unique_h_sums(self.ground.group(), sorted, self.order)
    }

    pub fn is_independent(&self, s: &[Element]) -> Result<bool> {
        let s = self.checked_subset(s)?;
        self.independent(&s)
    }

    /// Greedy maximal independent subset of `within` (default: `X`), adding
    /// elements in ascending order.
    pub fn find_basis(&self, within: Option<&[Element]>) -> Result<Vec<Element>> {
        self.require_validated()?;
        let within = match within {
            Some(w) => self.checked_subset(w)?,
            None => self.ground.elements().to_vec(),
        };
        let mut basis: Vec<Element> = Vec::new();
        for e in within {
            let pos = basis.binary_search(&e).unwrap_err();
            basis.insert(pos, e);
            if !self.independent(&basis)? {
                basis.remove(pos);
            }
        }
        Ok(basis)
    }

    pub fn rank(&self, s: &[Element]) -> Result<usize> {
        Ok(self.find_basis(Some(s))?.len())
    }

    fn check_maximal_and_outside(&self, a: &[Element], x: Element) -> Result<Vec<Element>> {
        self.require_validated()?;
        let a = self.checked_subset(a)?;
        if !self.ground.contains(x) {
            return Err(Error::NotInGround(x.value()));
        }
        if a.binary_search(&x).is_ok() {
            return Err(usage(format!("{x} already belongs to the independent set")));
        }
        if !self.independent(&a)? {
            return Err(usage("the given set is not independent"));
        }
        for &y in self.ground.elements() {
            if a.binary_search(&y).is_err() {
                let grown = GroundSet::from_elements(self.ground.group(), a.clone())?.with(y);
                if self.independent(grown.elements())? {
                    return Err(usage(format!(
                        "the given set is not maximal: {y} can be added"
                    )));
                }
            }
        }
        Ok(a)
    }

    /// The single proper double representation of length at most `2h-1`
    /// inside `A ∪ {x}`, for `A` a maximal independent set and `x ∉ A`. It
    /// has the shape `u x + a_1 + ... + a_{h-u} = a'_1 + ... + a'_h`.
    pub fn unique_proper_representation(
        &self,
        a: &[Element],
        x: Element,
    ) -> Result<DoubleRepresentation> {
        let a = self.check_maximal_and_outside(a, x)?;
        let ax = GroundSet::from_elements(self.ground.group(), a)?.with(x);
        let reps = find_proper_double_representations(&ax, 2 * self.order - 1, &self.limits)?;
        match reps.as_slice() {
            [] => Err(Error::Integrity(format!(
                "no proper double representation in {ax}, so the set was not maximal"
            ))),
            [d] => {
                let d = d.clone().tracking(x);
                if d.external_multiplicity() == 0
                    || d.right().multiplicity(x) != 0
                    || d.length() != self.order
                {
                    return Err(Error::Integrity(format!(
                        "representation {d} in {ax} does not have the expected shape"
                    )));
                }
                Ok(d)
            }
            many => Err(Error::Integrity(format!(
                "{} proper double representations in {ax}, expected exactly one",
                many.len()
            ))),
        }
    }

    /// Elements `a*` of the unique representation for which
    /// `(A ∪ {x}) \ {a*}` is independent; every summand other than `x`
    /// qualifies, and each swap is checked.
    pub fn exchange_set(&self, a: &[Element], x: Element) -> Result<Vec<Element>> {
        let d = self.unique_proper_representation(a, x)?;
        let ax = GroundSet::from_elements(self.ground.group(), self.checked_subset(a)?)?.with(x);
        let mut out = Vec::new();
        for e in d.support().into_iter().filter(|&e| e != x) {
            let swapped = ax.without(e);
            if !self.independent(swapped.elements())? {
                return Err(Error::Integrity(format!(
                    "{swapped} is not independent after exchanging {e} for {x}"
                )));
            }
            out.push(e);
        }
        Ok(out)
    }

    /// Largest union of `k` independent subsets of `within`, returned as `k`
    /// pairwise disjoint independent parts.
    pub fn union_partition(
        &self,
        within: Option<&[Element]>,
        k: usize,
    ) -> Result<Vec<Vec<Element>>> {
        self.require_validated()?;
        let elems = match within {
            Some(w) => self.checked_subset(w)?,
            None => self.ground.elements().to_vec(),
        };
        let mut p = Partitioner::new(self, vec![usize::MAX; k]);
        for e in elems {
            p.try_insert(e)?;
        }
        Ok(p.into_parts())
    }

    /// `rho_k`, the rank of the k-fold union matroid.
    pub fn union_rank(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(usage("k must be at least 1"));
        }
        Ok(self.union_partition(None, k)?.iter().map(Vec::len).sum())
    }

    /// Union ranks of `s` (default `X`) for `j = 1, 2, ...` until `s` is covered.
    fn profile_of(&self, s: Vec<Element>) -> Result<Vec<usize>> {
        let mut p = Partitioner::new(self, Vec::new());
        let mut uncovered = s;
        let mut rho = Vec::new();
        while !uncovered.is_empty() {
            p.caps.push(usize::MAX);
            p.parts.push(BTreeSet::new());
            let mut still = Vec::new();
            for e in uncovered {
                if !p.try_insert(e)? {
                    still.push(e);
                }
            }
            rho.push(p.covered());
            if rho.len() >= 2 && rho[rho.len() - 1] == rho[rho.len() - 2] {
                return Err(Error::Integrity(
                    "an extra part covered nothing although singletons are independent".into(),
                ));
            }
            uncovered = still;
        }
        Ok(rho)
    }

    pub fn rank_profile(&self) -> Result<RankProfile> {
        self.require_validated()?;
        Ok(RankProfile {
            rho: self.profile_of(self.ground.elements().to_vec())?,
        })
    }

    /// Smallest `k` such that `s` (default `X`) is a union of `k` independent
    /// sets; 0 for the empty set.
    pub fn covering_number(&self, s: Option<&[Element]>) -> Result<usize> {
        self.require_validated()?;
        let s = match s {
            Some(s) => self.checked_subset(s)?,
            None => self.ground.elements().to_vec(),
        };
        Ok(self.profile_of(s)?.len())
    }

    /// `n_X(k)`: the size of a maximal subset of `X` with covering number `k`,
    /// which is `rho_k`.
    pub fn max_set_with_covering_number(&self, k: usize) -> Result<usize> {
        let profile = self.rank_profile()?;
        if k == 0 || k > profile.covering_number() {
            return Err(usage(format!(
                "k must lie in 1..={}, got {k}",
                profile.covering_number()
            )));
        }
        Ok(profile.rho(k))
    }

    fn check_partition(&self, mu: &PartitionMu) -> Result<()> {
        if mu.total() != self.ground.len() {
            return Err(usage(format!(
                "{mu} is a partition of {}, not of |X| = {}",
                mu.total(),
                self.ground.len()
            )));
        }
        Ok(())
    }

    /// First failing condition of `r >= k` and `rho_j >= mu_1 + ... + mu_j`
    /// for `j = 1..=k`, `k` the covering number.
    pub fn mu_criterion(&self, mu: &PartitionMu) -> Result<Option<CriterionFailure>> {
        self.check_partition(mu)?;
        let profile = self.rank_profile()?;
        let k = profile.covering_number();
        if mu.parts().len() < k {
            return Ok(Some(CriterionFailure::TooFewParts {
                parts: mu.parts().len(),
                covering_number: k,
            }));
        }
        for j in 1..=k {
            let (rho, prefix) = (profile.rho(j), mu.prefix(j));
            if rho < prefix {
                return Ok(Some(CriterionFailure::RankDeficit { j, rho, prefix }));
            }
        }
        Ok(None)
    }

    pub fn mu_covering_exists(&self, mu: &PartitionMu) -> Result<bool> {
        Ok(self.mu_criterion(mu)?.is_none())
    }

    /// Builds a covering by disjoint independent sets of sizes `mu` when the
    /// criterion allows one. Each part `j` is filled in the truncation of the
    /// matroid to rank `mu_j`, so a full union of the truncations has
    /// exactly the requested sizes.
    pub fn construct_mu_covering(&self, mu: &PartitionMu) -> Result<MuCovering> {
        if let Some(fail) = self.mu_criterion(mu)? {
            return Ok(MuCovering::Infeasible(fail));
        }
        let mut p = Partitioner::new(self, mu.parts().to_vec());
        for &e in self.ground.elements() {
            if !p.try_insert(e)? {
                return Err(Error::Integrity(format!(
                    "criterion holds for {mu} but {e} could not be placed"
                )));
            }
        }
        let parts = p.into_parts();
        for (part, &want) in parts.iter().zip(mu.parts()) {
            if part.len() != want || !self.independent(part)? {
                return Err(Error::Integrity(format!(
                    "part {part:?} does not realize size {want}"
                )));
            }
        }
        Ok(MuCovering::Covering(parts))
    }
}

/// Replaces each part by its elements not already in an earlier part.
pub fn disjointify(parts: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let mut seen = BTreeSet::new();
    parts
        .iter()
        .map(|p| p.iter().copied().filter(|&e| seen.insert(e)).collect())
        .collect()
}

/// Matroid partition by shortest augmenting paths: part `j` is kept
/// independent in the matroid truncated to rank `caps[j]`.
struct Partitioner<'m> {
    m: &'m SidonMatroid,
    caps: Vec<usize>,
    parts: Vec<BTreeSet<Element>>,
    owner: HashMap<Element, usize>,
}

impl<'m> Partitioner<'m> {
    fn new(m: &'m SidonMatroid, caps: Vec<usize>) -> Self {
        let parts = vec![BTreeSet::new(); caps.len()];
        Partitioner {
            m,
            caps,
            parts,
            owner: HashMap::new(),
        }
    }

    fn covered(&self) -> usize {
        self.owner.len()
    }

    fn into_parts(self) -> Vec<Vec<Element>> {
        self.parts
            .into_iter()
            .map(|p| p.into_iter().collect())
            .collect()
    }

    fn independent_with(&self, j: usize, add: Element, remove: Option<Element>) -> Result<bool> {
        let mut v: Vec<Element> = self.parts[j]
            .iter()
            .copied()
            .filter(|&e| Some(e) != remove)
            .collect();
        let pos = v.binary_search(&add).unwrap_err();
        v.insert(pos, add);
        self.m.independent(&v)
    }

    /// Tries to add `s` to the union, moving covered elements between parts
    /// along a shortest exchange path. Returns whether `s` is now covered.
    fn try_insert(&mut self, s: Element) -> Result<bool> {
        if self.owner.contains_key(&s) {
            return Ok(true);
        }
        // pred[z] = (y, j): y enters part j in place of z
        let mut pred: HashMap<Element, (Element, usize)> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        let mut sink = None;
        'bfs: while let Some(y) = queue.pop_front() {
            let own = self.owner.get(&y).copied();
            for j in 0..self.parts.len() {
                if own == Some(j) {
                    continue;
                }
                if self.parts[j].len() < self.caps[j] && self.independent_with(j, y, None)? {
                    sink = Some((y, j));
                    break 'bfs;
                }
                for &z in &self.parts[j] {
                    if z != s && !pred.contains_key(&z) && self.independent_with(j, y, Some(z))? {
                        pred.insert(z, (y, j));
                        queue.push_back(z);
                    }
                }
            }
        }
        let Some((mut cur, mut target)) = sink else {
            return Ok(false);
        };
        let mut touched = BTreeSet::new();
        loop {
            self.parts[target].insert(cur);
            self.owner.insert(cur, target);
            touched.insert(target);
            match pred.get(&cur) {
                Some(&(prev, j)) => {
                    self.parts[j].remove(&cur);
                    cur = prev;
                    target = j;
                }
                None => break,
            }
        }
        for j in touched {
            let part: Vec<Element> = self.parts[j].iter().copied().collect();
            if !self.m.independent(&part)? {
                return Err(Error::Integrity(format!(
                    "augmenting path left part {part:?} dependent"
                )));
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AmbientGroup;

    const Z: AmbientGroup = AmbientGroup::Integers;

    fn els(v: &[i64]) -> Vec<Element> {
        v.iter().map(|&x| Z.element(x)).collect()
    }

    fn vals(v: &[Element]) -> Vec<i64> {
        v.iter().map(|e| e.value()).collect()
    }

    fn matroid(v: &[i64]) -> SidonMatroid {
        SidonMatroid::new(GroundSet::integers(v.iter().copied()).unwrap(), 2, true).unwrap()
    }

    #[test]
    fn construction() {
        assert!(matroid(&[1, 2, 3]).is_validated());
        assert!(matroid(&[1, 14, 19, 20, 25, 38]).is_validated());
        let err = SidonMatroid::new(GroundSet::interval(7), 2, true).unwrap_err();
        let Error::NotGeneralizedSidon { witness } = err else {
            panic!("expected a validation failure, got {err:?}");
        };
        assert_eq!((witness.order(), witness.k()), (3, 1));
        assert!(witness.certifies(&GroundSet::interval(7)));
        assert!(SidonMatroid::new(GroundSet::interval(3), 1, true).is_err());
    }

    #[test]
    fn independence() {
        let m = matroid(&[1, 2, 3]);
        assert!(m.is_independent(&els(&[1, 2])).unwrap());
        assert!(!m.is_independent(&els(&[1, 2, 3])).unwrap());
        assert!(m.is_independent(&[]).unwrap());
        for x in 1..=3 {
            assert!(m.is_independent(&els(&[x])).unwrap());
        }
        assert_eq!(m.is_independent(&els(&[4])), Err(Error::NotInGround(4)));
    }

    #[test]
    fn bases_and_ranks() {
        let m = matroid(&[1, 2, 3]);
        assert_eq!(vals(&m.find_basis(None).unwrap()), vec![1, 2]);
        assert_eq!(m.rank(m.ground().elements()).unwrap(), 2);
        assert!(m.find_basis(Some(&[])).unwrap().is_empty());
        let m = matroid(&[1, 14, 19, 20, 25, 38]);
        assert_eq!(m.find_basis(None).unwrap().len(), 4);
        assert_eq!(m.rank(m.ground().elements()).unwrap(), 4);
        assert!(m.is_independent(&els(&[1, 14, 19, 38])).unwrap());
        assert_eq!(m.rank(&els(&[1, 14, 19])).unwrap(), 3);
    }

    #[test]
    fn unvalidated_matroid_refuses_greedy() {
        let m = SidonMatroid::new(GroundSet::interval(7), 2, false).unwrap();
        assert!(matches!(m.find_basis(None), Err(Error::Usage(_))));
        assert!(matches!(m.union_rank(2), Err(Error::Usage(_))));
        assert!(m.is_independent(&els(&[1, 3, 6, 7])).unwrap());
    }

    #[test]
    fn unique_representation_examples() {
        let m = matroid(&[1, 2, 3]);
        let d = m
            .unique_proper_representation(&els(&[1, 3]), Z.element(2))
            .unwrap();
        assert_eq!(d.to_string(), "2 + 2 = 1 + 3");
        assert_eq!(d.external_multiplicity(), 2);
        let d = m
            .unique_proper_representation(&els(&[1, 2]), Z.element(3))
            .unwrap();
        assert_eq!(d.to_string(), "1 + 3 = 2 + 2");
        assert_eq!(d.external_multiplicity(), 1);
        assert!(m
            .unique_proper_representation(&els(&[1, 3]), Z.element(3))
            .is_err());
        assert!(m
            .unique_proper_representation(&els(&[1]), Z.element(2))
            .is_err());
    }

    #[test]
    fn exchange_examples() {
        let m = matroid(&[1, 2, 3]);
        assert_eq!(
            vals(&m.exchange_set(&els(&[1, 3]), Z.element(2)).unwrap()),
            vec![1, 3]
        );
        let m = matroid(&[1, 14, 19, 20, 25, 38]);
        let basis = m.find_basis(None).unwrap();
        for &x in m.ground().elements() {
            if !basis.contains(&x) {
                assert!(!m.exchange_set(&basis, x).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn union_and_covering() {
        let m = matroid(&[1, 2, 3]);
        assert_eq!(m.union_rank(1).unwrap(), 2);
        assert_eq!(m.union_rank(2).unwrap(), 3);
        assert_eq!(m.union_rank(5).unwrap(), 3);
        assert_eq!(m.covering_number(None).unwrap(), 2);
        assert_eq!(m.covering_number(Some(&els(&[1, 2]))).unwrap(), 1);
        assert_eq!(m.covering_number(Some(&[])).unwrap(), 0);
        assert_eq!(m.rank_profile().unwrap().ranks(), &[2, 3]);
        assert_eq!(m.max_set_with_covering_number(1).unwrap(), 2);
        assert_eq!(m.max_set_with_covering_number(2).unwrap(), 3);
        assert!(m.max_set_with_covering_number(3).is_err());
        assert!(m.max_set_with_covering_number(0).is_err());
        let m = matroid(&[1, 14, 19, 20, 25, 38]);
        assert_eq!(m.covering_number(None).unwrap(), 2);
    }

    #[test]
    fn mu_coverings() {
        let m = matroid(&[1, 2, 3]);
        let mu = PartitionMu::new(vec![2, 1]).unwrap();
        assert!(m.mu_covering_exists(&mu).unwrap());
        let MuCovering::Covering(parts) = m.construct_mu_covering(&mu).unwrap() else {
            panic!("expected a covering");
        };
        assert_eq!(parts.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 1]);
        let single = PartitionMu::new(vec![3]).unwrap();
        assert!(!m.mu_covering_exists(&single).unwrap());
        assert_eq!(
            m.construct_mu_covering(&single).unwrap(),
            MuCovering::Infeasible(CriterionFailure::TooFewParts {
                parts: 1,
                covering_number: 2
            })
        );
        let ones = PartitionMu::new(vec![1, 1, 1]).unwrap();
        assert!(m.mu_covering_exists(&ones).unwrap());
        let wrong = PartitionMu::new(vec![2, 2]).unwrap();
        assert!(m.mu_covering_exists(&wrong).is_err());
    }

    #[test]
    fn partitions() {
        assert!(PartitionMu::new(vec![1, 2]).is_err());
        assert!(PartitionMu::new(vec![2, 0]).is_err());
        let counts: Vec<usize> = (0..9).map(|n| PartitionMu::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(PartitionMu::all(6).iter().all(|p| p.total() == 6));
    }

    #[test]
    fn disjointify_examples() {
        let parts = vec![els(&[1, 2]), els(&[2, 3])];
        assert_eq!(disjointify(&parts), vec![els(&[1, 2]), els(&[3])]);
        let disjoint = vec![els(&[1, 5]), els(&[2]), els(&[3, 4])];
        assert_eq!(disjointify(&disjoint), disjoint);
    }
}
