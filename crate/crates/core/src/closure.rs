//! Closure operators on finite ground sets, stored through their flats.
//!
//! The closure of a set is the intersection of all flats containing it, so
//! the flat family is the only state an operator carries.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::is_valid_element_name;
use crate::error::{Error, Result};

/// Default cap on `|E|` for operations that scan `2^E`.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

/// A subset of the ground set as a bitset over element indices.
///
/// Ordered lexicographically on the sorted index list, which matches the
/// label order of the corresponding flats because ground sets are kept
/// sorted by name.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        ElementSet(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: ElementSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Compresses `self ∩ kept` onto the indices of `kept`, in order.
    pub fn project(self, kept: ElementSet) -> ElementSet {
        kept.iter()
            .enumerate()
            .filter(|(_, i)| self.contains(*i))
            .map(|(j, _)| j)
            .collect()
    }

    /// Inverse of [`ElementSet::project`].
    pub fn embed(self, kept: ElementSet) -> ElementSet {
        kept.iter()
            .enumerate()
            .filter(|(j, _)| self.contains(*j))
            .map(|(_, i)| i)
            .collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElementSet(iter.into_iter().fold(0, |acc, i| acc | 1u64 << i))
    }
}

/// A finite closure operator given by its intersection-closed flat family.
#[derive(Clone, Debug)]
pub struct ClosureOperator {
    ground: Vec<String>,
    flats: Vec<ElementSet>,
    limit: usize,
}

impl PartialEq for ClosureOperator {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.flats == other.flats
    }
}

impl Eq for ClosureOperator {}

/// Output of [`ClosureOperator::enumerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub independent_sets: Vec<ElementSet>,
    pub bases: Vec<ElementSet>,
    pub maximal_independent_sets: Vec<ElementSet>,
    pub proper_flats: Vec<ElementSet>,
    /// Pairs `(F, G)` of flats with `F ⊊ G` and nothing strictly between.
    pub cover_relations: Vec<(ElementSet, ElementSet)>,
}

/// Outcome of matroid recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidCheck {
    Matroid,
    /// `first - element + y` is not a maximal independent set for any `y` in
    /// `second ∖ first`.
    ExchangeViolation {
        first: ElementSet,
        second: ElementSet,
        element: usize,
    },
    /// The independent sets form a matroid whose closure differs from the
    /// operator at `set` (a flat of exactly one of the two).
    ClosureMismatch {
        set: ElementSet,
    },
}

impl MatroidCheck {
    pub fn is_matroid(&self) -> bool {
        matches!(self, MatroidCheck::Matroid)
    }
}

/// A strictly increasing chain of proper flats.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag(Vec<ElementSet>);

impl Flag {
    pub fn empty() -> Self {
        Flag(Vec::new())
    }

    pub fn new(f: &ClosureOperator, chain: Vec<ElementSet>) -> Result<Self> {
        for flat in &chain {
            if !f.is_flat(*flat) {
                return Err(Error::NotAFlat(f.format_set(*flat)));
            }
            if *flat == f.full() {
                return Err(Error::NotProperFlat(f.format_set(*flat)));
            }
        }
        if let Some(w) = chain.windows(2).find(|w| !w[0].is_proper_subset(w[1])) {
            return Err(Error::InvalidArgument(format!(
                "flag is not strictly increasing at {} ⊄ {}",
                f.format_set(w[0]),
                f.format_set(w[1])
            )));
        }
        Ok(Flag(chain))
    }

    pub(crate) fn from_chain_unchecked(chain: Vec<ElementSet>) -> Self {
        Flag(chain)
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> Option<ElementSet> {
        self.0.first().copied()
    }
}

fn normalize_ground<S: AsRef<str>>(ground: &[S]) -> Result<Vec<String>> {
    let mut names: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
    if let Some(bad) = names.iter().find(|n| !is_valid_element_name(n)) {
        return Err(Error::InvalidElement(bad.clone()));
    }
    names.sort();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateElement(w[0].clone()));
    }
    if names.len() > ElementSet::CAPACITY {
        return Err(Error::GroundSetTooLarge(names.len()));
    }
    Ok(names)
}

fn set_in(ground: &[String], names: &[impl AsRef<str>]) -> Result<ElementSet> {
    names
        .iter()
        .map(|n| {
            ground
                .binary_search_by(|g| g.as_str().cmp(n.as_ref()))
                .map_err(|_| Error::UnknownElement(n.as_ref().to_string()))
        })
        .collect()
}

fn intersection_closure(mut family: BTreeSet<ElementSet>) -> BTreeSet<ElementSet> {
    loop {
        let items: Vec<ElementSet> = family.iter().copied().collect();
        let mut added = false;
        for (i, a) in items.iter().enumerate() {
            for b in &items[i + 1..] {
                added |= family.insert(a.intersection(*b));
            }
        }
        if !added {
            return family;
        }
    }
}

impl ClosureOperator {
    /// Validates a flat family on `ground` and builds the operator.
    ///
    /// The family must contain the whole ground set and be closed under
    /// pairwise intersection; the error names a witness pair otherwise.
    pub fn new<S, T>(ground: &[S], family: &[Vec<T>]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let ground = normalize_ground(ground)?;
        let sets = family
            .iter()
            .map(|flat| set_in(&ground, flat))
            .collect::<Result<Vec<_>>>()?;
        Self::from_flat_sets(ground, sets)
    }

    /// Same as [`ClosureOperator::new`] with the ground set appended to
    /// `proper_flats`.
    pub fn from_proper_flats<S, T>(ground: &[S], proper_flats: &[Vec<T>]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let names = normalize_ground(ground)?;
        let mut sets = proper_flats
            .iter()
            .map(|flat| set_in(&names, flat))
            .collect::<Result<Vec<_>>>()?;
        sets.push(ElementSet::full(names.len()));
        Self::from_flat_sets(names, sets)
    }

    fn from_flat_sets(ground: Vec<String>, sets: Vec<ElementSet>) -> Result<Self> {
        let full = ElementSet::full(ground.len());
        let mut flats: Vec<ElementSet> = sets;
        flats.sort();
        flats.dedup();
        if !flats.contains(&full) {
            return Err(Error::MissingGroundSet);
        }
        let lookup: HashSet<ElementSet> = flats.iter().copied().collect();
        let op = ClosureOperator {
            ground,
            flats,
            limit: DEFAULT_ENUMERATION_LIMIT,
        };
        for (i, a) in op.flats.iter().enumerate() {
            for b in &op.flats[i + 1..] {
                let meet = a.intersection(*b);
                if !lookup.contains(&meet) {
                    return Err(Error::NotIntersectionClosed {
                        first: op.format_set(*a),
                        second: op.format_set(*b),
                        meet: op.format_set(meet),
                    });
                }
            }
        }
        Ok(op)
    }

    /// Sets the largest `|E|` for which exhaustive enumeration is allowed.
    pub fn with_enumeration_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn enumeration_limit(&self) -> usize {
        self.limit
    }

    pub(crate) fn check_budget(&self) -> Result<()> {
        if self.ground.len() > self.limit {
            Err(Error::EnumerationBudget {
                size: self.ground.len(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn ground_set(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.ground.len())
    }

    /// All flats, including `E`, in lexicographic order.
    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn proper_flats(&self) -> Vec<ElementSet> {
        let full = self.full();
        self.flats.iter().copied().filter(|f| *f != full).collect()
    }

    pub fn is_flat(&self, set: ElementSet) -> bool {
        self.flats.binary_search(&set).is_ok()
    }

    pub fn is_proper_flat(&self, set: ElementSet) -> bool {
        set != self.full() && self.is_flat(set)
    }

    /// `f(∅)`, the least flat.
    pub fn bottom(&self) -> ElementSet {
        self.closure(ElementSet::empty())
    }

    pub fn closure(&self, set: ElementSet) -> ElementSet {
        self.flats
            .iter()
            .filter(|f| set.is_subset(**f))
            .fold(self.full(), |acc, f| acc.intersection(*f))
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        set.iter()
            .all(|i| !self.closure(set.without(i)).contains(i))
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        set_in(&self.ground, names)
    }

    pub fn names(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.ground[i].clone()).collect()
    }

    pub fn format_set(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.names(set).join(","))
    }

    pub fn closure_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<String>> {
        Ok(self.names(self.closure(self.set_of(names)?)))
    }

    pub fn is_independent_names<S: AsRef<str>>(&self, names: &[S]) -> Result<bool> {
        Ok(self.is_independent(self.set_of(names)?))
    }

    /// All independent sets in lexicographic order.
    pub fn independent_sets(&self) -> Result<Vec<ElementSet>> {
        self.check_budget()?;
        let n = self.ground.len();
        let mut out = Vec::new();
        let mut stack = vec![(ElementSet::empty(), 0usize)];
        // independence is hereditary, so every independent set extends one
        // obtained by dropping its largest element
        while let Some((set, next)) = stack.pop() {
            out.push(set);
            for j in (next..n).rev() {
                let bigger = set.with(j);
                if self.is_independent(bigger) {
                    stack.push((bigger, j + 1));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn maximal_independent_sets(&self) -> Result<Vec<ElementSet>> {
        let independent = self.independent_sets()?;
        let lookup: HashSet<ElementSet> = independent.iter().copied().collect();
        let n = self.ground.len();
        Ok(independent
            .into_iter()
            .filter(|set| (0..n).all(|j| set.contains(j) || !lookup.contains(&set.with(j))))
            .collect())
    }

    /// Independent sets whose closure is the whole ground set.
    pub fn bases(&self) -> Result<Vec<ElementSet>> {
        let full = self.full();
        Ok(self
            .independent_sets()?
            .into_iter()
            .filter(|set| self.closure(*set) == full)
            .collect())
    }

    /// Flats covering `flat` in the lattice of flats.
    pub fn upper_covers(&self, flat: ElementSet) -> Vec<ElementSet> {
        let above: Vec<ElementSet> = self
            .flats
            .iter()
            .copied()
            .filter(|g| flat.is_proper_subset(*g))
            .collect();
        above
            .iter()
            .copied()
            .filter(|g| !above.iter().any(|h| h.is_proper_subset(*g)))
            .collect()
    }

    pub fn cover_relations(&self) -> Vec<(ElementSet, ElementSet)> {
        self.flats
            .iter()
            .flat_map(|f| self.upper_covers(*f).into_iter().map(move |g| (*f, g)))
            .collect()
    }

    pub fn enumerate(&self) -> Result<Enumeration> {
        Ok(Enumeration {
            independent_sets: self.independent_sets()?,
            bases: self.bases()?,
            maximal_independent_sets: self.maximal_independent_sets()?,
            proper_flats: self.proper_flats(),
            cover_relations: self.cover_relations(),
        })
    }

    /// `f/F` on `E ∖ F`: the flats containing `F`, with `F` removed.
    pub fn contraction(&self, flat: ElementSet) -> Result<Self> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(self.format_set(flat)));
        }
        let kept = self.full().difference(flat);
        let flats = self
            .flats
            .iter()
            .filter(|g| flat.is_subset(**g))
            .map(|g| g.difference(flat).project(kept))
            .collect();
        Ok(self.derived(self.names(kept), flats))
    }

    /// `f|_F` on `F`: the flats contained in `F`.
    pub fn restriction(&self, flat: ElementSet) -> Result<Self> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(self.format_set(flat)));
        }
        let flats = self
            .flats
            .iter()
            .filter(|g| g.is_subset(flat))
            .map(|g| g.project(flat))
            .collect();
        Ok(self.derived(self.names(flat), flats))
    }

    fn derived(&self, ground: Vec<String>, mut flats: Vec<ElementSet>) -> Self {
        flats.sort();
        flats.dedup();
        ClosureOperator {
            ground,
            flats,
            limit: self.limit,
        }
    }

    /// Checks basis exchange on the maximal independent sets and, when that
    /// holds, that the operator coincides with the closure of the matroid
    /// they define.
    pub fn matroid_check(&self) -> Result<MatroidCheck> {
        let maximal = self.maximal_independent_sets()?;
        if let Some((first, second, element)) = exchange_violation(&maximal) {
            return Ok(MatroidCheck::ExchangeViolation {
                first,
                second,
                element,
            });
        }
        let matroid_flats = matroid_flats(self.ground.len(), &maximal);
        let ours: BTreeSet<ElementSet> = self.flats.iter().copied().collect();
        let mismatch = ours.symmetric_difference(&matroid_flats).next();
        Ok(match mismatch {
            Some(set) => MatroidCheck::ClosureMismatch { set: *set },
            None => MatroidCheck::Matroid,
        })
    }

    pub fn is_matroid(&self) -> Result<bool> {
        Ok(self.matroid_check()?.is_matroid())
    }

    pub(crate) fn require_matroid(&self) -> Result<()> {
        match self.matroid_check()? {
            MatroidCheck::Matroid => Ok(()),
            MatroidCheck::ExchangeViolation {
                first,
                second,
                element,
            } => Err(Error::NotAMatroid(format!(
                "exchange fails for {} and {} at {}",
                self.format_set(first),
                self.format_set(second),
                self.ground[element]
            ))),
            MatroidCheck::ClosureMismatch { set } => Err(Error::NotAMatroid(format!(
                "{} is a flat of only one of the operator and its matroid",
                self.format_set(set)
            ))),
        }
    }

    /// `U_{rank,|E|}`: every set of size below `rank` is a flat, plus `E`.
    pub fn uniform_matroid<S: AsRef<str>>(rank: usize, ground: &[S]) -> Result<Self> {
        let names = normalize_ground(ground)?;
        let n = names.len();
        if rank > n {
            return Err(Error::InvalidArgument(format!(
                "rank {rank} exceeds ground set size {n}"
            )));
        }
        if n > DEFAULT_ENUMERATION_LIMIT {
            return Err(Error::EnumerationBudget {
                size: n,
                limit: DEFAULT_ENUMERATION_LIMIT,
            });
        }
        let mut flats: Vec<ElementSet> = (0..1u64 << n)
            .map(ElementSet)
            .filter(|s| s.len() < rank)
            .collect();
        flats.push(ElementSet::full(n));
        Self::from_flat_sets(names, flats)
    }

    /// The matroid with the given bases; flats are the sets whose rank grows
    /// when any outside element is added.
    pub fn matroid_from_bases<S, T>(ground: &[S], bases: &[Vec<T>]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let names = normalize_ground(ground)?;
        if names.len() > DEFAULT_ENUMERATION_LIMIT {
            return Err(Error::EnumerationBudget {
                size: names.len(),
                limit: DEFAULT_ENUMERATION_LIMIT,
            });
        }
        let mut sets = bases
            .iter()
            .map(|b| set_in(&names, b))
            .collect::<Result<Vec<_>>>()?;
        sets.sort();
        sets.dedup();
        if sets.is_empty() {
            return Err(Error::InvalidArgument("no bases given".into()));
        }
        if let Some((first, second, element)) = exchange_violation(&sets) {
            let fmt = |s: ElementSet| {
                let parts: Vec<&str> = s.iter().map(|i| names[i].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            };
            return Err(Error::ExchangeViolation {
                first: fmt(first),
                second: fmt(second),
                element: names[element].clone(),
            });
        }
        let flats = matroid_flats(names.len(), &sets).into_iter().collect();
        Self::from_flat_sets(names, flats)
    }

    /// Random subsets of `2^E` kept with probability `density`, plus `E`,
    /// closed under intersection. Deterministic in `seed`.
    pub fn random<S: AsRef<str>>(seed: u64, ground: &[S], density: f64) -> Result<Self> {
        if !(density > 0.0 && density <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "density {density} is outside (0, 1]"
            )));
        }
        let names = normalize_ground(ground)?;
        let n = names.len();
        if n > DEFAULT_ENUMERATION_LIMIT {
            return Err(Error::EnumerationBudget {
                size: n,
                limit: DEFAULT_ENUMERATION_LIMIT,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut family: BTreeSet<ElementSet> = (0..1u64 << n)
            .filter(|_| rng.gen_bool(density))
            .map(ElementSet)
            .collect();
        family.insert(ElementSet::full(n));
        let flats = intersection_closure(family).into_iter().collect();
        Self::from_flat_sets(names, flats)
    }
}

fn exchange_violation(bases: &[ElementSet]) -> Option<(ElementSet, ElementSet, usize)> {
    let lookup: HashSet<ElementSet> = bases.iter().copied().collect();
    for first in bases {
        for second in bases {
            for x in first.difference(*second).iter() {
                let ok = second
                    .difference(*first)
                    .iter()
                    .any(|y| lookup.contains(&first.without(x).with(y)));
                if !ok {
                    return Some((*first, *second, x));
                }
            }
        }
    }
    None
}

fn matroid_flats(n: usize, bases: &[ElementSet]) -> BTreeSet<ElementSet> {
    let rank = |s: ElementSet| {
        bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    };
    (0..1u64 << n)
        .map(ElementSet)
        .filter(|s| {
            let r = rank(*s);
            (0..n).all(|x| s.contains(x) || rank(s.with(x)) > r)
        })
        .collect()
}

impl fmt::Display for ClosureOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flats: Vec<String> = self.flats.iter().map(|s| self.format_set(*s)).collect();
        write!(
            f,
            "closure operator on {{{}}} with flats {}",
            self.ground.join(","),
            flats.join(" ")
        )
    }
}

/// JSON instance description.
///
/// Either `{"ground_set": [...], "proper_flats": [[...], ...]}` or a matroid
/// given as `{"ground_set": [...], "matroid": {"type": "uniform", "rank": r}}`
/// or `{"matroid": {"type": "bases", "bases": [[...], ...]}}`; for the bases
/// form the ground set defaults to the union of the bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground_set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proper_flats: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid: Option<MatroidSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform { rank: usize },
    Bases { bases: Vec<Vec<String>> },
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_operator(&self) -> Result<ClosureOperator> {
        match (&self.proper_flats, &self.matroid) {
            (Some(flats), None) => {
                let ground = self.ground_set.as_ref().ok_or_else(|| {
                    Error::InvalidArgument("`ground_set` is required with `proper_flats`".into())
                })?;
                ClosureOperator::from_proper_flats(ground, flats)
            }
            (None, Some(MatroidSpec::Uniform { rank })) => {
                let ground = self.ground_set.as_ref().ok_or_else(|| {
                    Error::InvalidArgument("`ground_set` is required for uniform matroids".into())
                })?;
                ClosureOperator::uniform_matroid(*rank, ground)
            }
            (None, Some(MatroidSpec::Bases { bases })) => {
                let ground: Vec<String> = match &self.ground_set {
                    Some(g) => g.clone(),
                    None => {
                        let all: BTreeSet<&String> = bases.iter().flatten().collect();
                        all.into_iter().cloned().collect()
                    }
                };
                ClosureOperator::matroid_from_bases(&ground, bases)
            }
            _ => Err(Error::InvalidArgument(
                "exactly one of `proper_flats` and `matroid` must be given".into(),
            )),
        }
    }

    pub fn from_operator(f: &ClosureOperator) -> Self {
        InstanceFile {
            ground_set: Some(f.ground_set().to_vec()),
            proper_flats: Some(f.proper_flats().into_iter().map(|s| f.names(s)).collect()),
            matroid: None,
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn example() -> ClosureOperator {
        crate::instances::worked_example()
    }

    fn sets(f: &ClosureOperator, list: &[&[&str]]) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = list.iter().map(|s| f.set_of(s).unwrap()).collect();
        out.sort();
        out
    }

    #[test]
    fn validates_example_family() {
        assert_eq!(example().flats().len(), 13);
    }

    #[test]
    fn degenerate_single_flat() {
        let f = ClosureOperator::new(&["1", "2"], &[vec!["1", "2"]]).unwrap();
        assert_eq!(f.bottom(), f.full());
        assert_eq!(f.independent_sets().unwrap(), vec![ElementSet::empty()]);
        assert_eq!(f.bases().unwrap(), vec![ElementSet::empty()]);
    }

    #[test]
    fn rejects_missing_meet() {
        let err = ClosureOperator::new(
            &["1", "2", "3"],
            &[vec![], vec!["1", "2"], vec!["2", "3"], vec!["1", "2", "3"]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NotIntersectionClosed {
                first: "{1,2}".into(),
                second: "{2,3}".into(),
                meet: "{2}".into()
            }
        );
        let err = ClosureOperator::new(&["1", "2"], &[vec!["1"]]).unwrap_err();
        assert_eq!(err, Error::MissingGroundSet);
        assert!(matches!(
            ClosureOperator::new(&["1", "1"], &[vec!["1"]]),
            Err(Error::DuplicateElement(_))
        ));
        assert!(matches!(
            ClosureOperator::new(&["1"], &[vec!["1"], vec!["9"]]),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let f = example();
        assert_eq!(
            f.closure_of(&["1", "4"]).unwrap(),
            vec!["1", "2", "3", "4", "5"]
        );
        assert_eq!(f.closure_of(&["1", "2"]).unwrap(), vec!["1", "2"]);
        assert!(f.closure_of(&["6"]).is_err());
        for flat in f.flats() {
            assert_eq!(f.closure(*flat), *flat);
        }
    }

    #[test]
    fn independence_examples() {
        let f = example();
        assert!(f.is_independent_names(&["1", "2", "3"]).unwrap());
        assert!(!f.is_independent_names(&["1", "2", "3", "4"]).unwrap());
        assert!(f.is_independent(ElementSet::empty()));
    }

    #[test]
    fn enumerates_example() {
        let f = example();
        let e = f.enumerate().unwrap();
        let expected = sets(
            &f,
            &[
                &["1", "2", "3"],
                &["3", "4", "5"],
                &["1", "4"],
                &["1", "5"],
                &["2", "4"],
                &["2", "5"],
            ],
        );
        assert_eq!(e.maximal_independent_sets, expected);
        assert_eq!(e.bases, expected);
        assert_eq!(e.proper_flats.len(), 12);
        // 5 atoms over ∅, 12 singleton-pair covers, 6 pairs under E
        assert_eq!(e.cover_relations.len(), 23);
    }

    #[test]
    fn uniform_enumeration() {
        let u = ClosureOperator::uniform_matroid(2, &["1", "2", "3"]).unwrap();
        let e = u.enumerate().unwrap();
        assert_eq!(e.bases, sets(&u, &[&["1", "2"], &["1", "3"], &["2", "3"]]));
        assert_eq!(e.proper_flats, sets(&u, &[&[], &["1"], &["2"], &["3"]]));
    }

    #[test]
    fn contraction_examples() {
        let f = example();
        let c = f.contraction(f.set_of(&["3"]).unwrap()).unwrap();
        assert_eq!(c.ground_set(), ["1", "2", "4", "5"]);
        let expected = ClosureOperator::new(
            &["1", "2", "4", "5"],
            &[
                vec![],
                vec!["1"],
                vec!["2"],
                vec!["4"],
                vec!["5"],
                vec!["1", "2", "4", "5"],
            ],
        )
        .unwrap();
        assert_eq!(c, expected);

        assert_eq!(f.contraction(ElementSet::empty()).unwrap(), f);

        let u = ClosureOperator::uniform_matroid(2, &["1", "2", "3"]).unwrap();
        let c = u.contraction(u.set_of(&["1"]).unwrap()).unwrap();
        assert_eq!(c, ClosureOperator::uniform_matroid(1, &["2", "3"]).unwrap());
        assert!(matches!(
            u.contraction(u.set_of(&["1", "2"]).unwrap()),
            Err(Error::NotAFlat(_))
        ));
    }

    #[test]
    fn restriction_examples() {
        let f = example();
        let r = f.restriction(f.set_of(&["1", "2"]).unwrap()).unwrap();
        assert_eq!(
            r,
            ClosureOperator::new(&["1", "2"], &[vec![], vec!["1"], vec!["2"], vec!["1", "2"]])
                .unwrap()
        );
        assert_eq!(f.restriction(f.full()).unwrap(), f);
    }

    #[test]
    fn matroid_recognition() {
        let u = ClosureOperator::uniform_matroid(2, &["1", "2", "3"]).unwrap();
        assert!(u.is_matroid().unwrap());
        assert!(matches!(
            example().matroid_check().unwrap(),
            MatroidCheck::ExchangeViolation { .. }
        ));
        let b = ClosureOperator::matroid_from_bases(
            &["1", "2", "3"],
            &[vec!["1", "2"], vec!["1", "3"], vec!["2", "3"]],
        )
        .unwrap();
        assert_eq!(b, u);
        // matroidal independent sets, but {1,2} is an extra flat
        let extra = ClosureOperator::from_proper_flats(
            &["1", "2", "3"],
            &[vec![], vec!["1"], vec!["2"], vec!["3"], vec!["1", "2"]],
        )
        .unwrap();
        assert_eq!(
            extra.matroid_check().unwrap(),
            MatroidCheck::ClosureMismatch {
                set: extra.set_of(&["1", "2"]).unwrap()
            }
        );
    }

    #[test]
    fn bases_must_exchange() {
        assert!(matches!(
            ClosureOperator::matroid_from_bases(&["1", "2", "3"], &[vec!["1", "2"], vec!["3"]]),
            Err(Error::ExchangeViolation { .. })
        ));
    }

    #[test]
    fn uniform_flats() {
        let u = ClosureOperator::uniform_matroid(2, &["1", "2", "3"]).unwrap();
        assert_eq!(u.flats().len(), 5);
        let u0 = ClosureOperator::uniform_matroid(0, &["1", "2"]).unwrap();
        assert_eq!(u0.flats(), &[u0.full()]);
    }

    #[test]
    fn random_is_deterministic() {
        let ground = ["a", "b", "c", "d"];
        let f = ClosureOperator::random(7, &ground, 0.4).unwrap();
        assert_eq!(f, ClosureOperator::random(7, &ground, 0.4).unwrap());
        assert!(ClosureOperator::random(7, &ground, 0.0).is_err());
        assert!(ClosureOperator::random(7, &ground, 1.5).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let f = example().with_enumeration_limit(4);
        assert_eq!(
            f.independent_sets().unwrap_err(),
            Error::EnumerationBudget { size: 5, limit: 4 }
        );
    }

    #[test]
    fn instance_forms() {
        let inst = InstanceFile::from_json(
            r#"{"ground_set":["1","2","3"],"matroid":{"type":"uniform","rank":2}}"#,
        )
        .unwrap();
        let u = inst.to_operator().unwrap();
        assert_eq!(
            u,
            ClosureOperator::uniform_matroid(2, &["1", "2", "3"]).unwrap()
        );
        let inst = InstanceFile::from_json(
            r#"{"matroid":{"type":"bases","bases":[["1","2"],["1","3"],["2","3"]]}}"#,
        )
        .unwrap();
        assert_eq!(inst.to_operator().unwrap(), u);
        let round = InstanceFile::from_operator(&example())
            .to_operator()
            .unwrap();
        assert_eq!(round, example());
        assert!(InstanceFile::from_json(r#"{"ground_set":["1"],"bogus":1}"#).is_err());
    }
}
