//! Shelling orders: verification, exhaustive search, the flag-to-basis
//! construction for augmented Bergman complexes, restriction sets and
//! h-vector bookkeeping.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bergman::{
    augmented_bergman, augmented_facets, bergman_complex, ground_label, AugmentedFace,
};
use crate::closure::{ClosureOperator, ElementSet};
use crate::complex::{canonical_facets, format_face, SimplicialComplex, VertexLabel, VertexSet};
use crate::error::{Error, Result};

/// Node expansions allowed to a search unless the caller says otherwise.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// An ordered list of the facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingOrder {
    pub facets: Vec<Vec<VertexLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restriction_sets: Option<Vec<Vec<VertexLabel>>>,
}

impl ShellingOrder {
    pub fn new(facets: Vec<Vec<VertexLabel>>) -> Self {
        ShellingOrder {
            facets,
            restriction_sets: None,
        }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

/// Translates `order` to index sets, checking it lists every facet once.
fn order_sets(complex: &SimplicialComplex, order: &[Vec<VertexLabel>]) -> Result<Vec<VertexSet>> {
    let facets: HashSet<VertexSet> = complex.facet_sets().iter().copied().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(order.len());
    for face in order {
        let mut sorted = face.clone();
        sorted.sort();
        let set = complex
            .set_of(&sorted)
            .ok()
            .filter(|s| facets.contains(s) && s.len() == sorted.len())
            .ok_or_else(|| {
                Error::NotAPermutation(format!("{} is not a facet", format_face(face)))
            })?;
        if !seen.insert(set) {
            return Err(Error::NotAPermutation(format!(
                "{} is listed twice",
                format_face(face)
            )));
        }
        out.push(set);
    }
    if out.len() != facets.len() {
        return Err(Error::NotAPermutation(format!(
            "{} of {} facets listed",
            out.len(),
            facets.len()
        )));
    }
    Ok(out)
}

/// Vertices `v` of `facet` with `facet ∖ {v}` inside some earlier facet.
fn restriction_of<'a>(facet: VertexSet, earlier: impl Iterator<Item = &'a VertexSet>) -> VertexSet {
    earlier.fold(VertexSet::empty(), |acc, prev| {
        let missing = facet.difference(*prev);
        if missing.len() == 1 {
            acc.union(missing)
        } else {
            acc
        }
    })
}

/// Pairwise criterion: every `σ_i ∩ σ_j` lies in some `σ_i ∖ {v}` that is
/// covered by an earlier facet.
fn extends_shelling(facet: VertexSet, earlier: &[VertexSet]) -> bool {
    if earlier.is_empty() {
        return true;
    }
    let restriction = restriction_of(facet, earlier.iter());
    earlier
        .iter()
        .all(|prev| !facet.difference(*prev).intersection(restriction).is_empty())
}

fn first_failure(sets: &[VertexSet]) -> Option<usize> {
    (1..sets.len()).find(|&i| !extends_shelling(sets[i], &sets[..i]))
}

/// Definitional check: `⟨σ_1..σ_{i-1}⟩ ∩ ⟨σ_i⟩` is generated by the
/// intersections `σ_i ∩ σ_j` and must be pure of dimension `dim σ_i - 1`.
fn first_failure_by_definition(sets: &[VertexSet]) -> Option<usize> {
    (1..sets.len()).find(|&i| {
        let meets = canonical_facets(sets[..i].iter().map(|s| s.intersection(sets[i])).collect());
        meets.is_empty() || meets.iter().any(|m| m.len() + 1 != sets[i].len())
    })
}

/// Result of checking a facet order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingVerification {
    pub valid: bool,
    /// One-based position of the first facet that breaks the condition.
    pub failed_at: Option<usize>,
    pub detail: Option<String>,
}

impl ShellingVerification {
    fn from_failure(order: &[Vec<VertexLabel>], failure: Option<usize>) -> Self {
        ShellingVerification {
            valid: failure.is_none(),
            failed_at: failure.map(|i| i + 1),
            detail: failure.map(|i| {
                format!(
                    "{} does not meet the earlier facets in a pure codimension-one complex",
                    format_face(&order[i])
                )
            }),
        }
    }
}

pub fn verify_shelling(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<ShellingVerification> {
    let sets = order_sets(complex, &order.facets)?;
    Ok(ShellingVerification::from_failure(
        &order.facets,
        first_failure(&sets),
    ))
}

/// Same verdict as [`verify_shelling`], computed from the definition.
pub fn verify_shelling_by_definition(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<ShellingVerification> {
    let sets = order_sets(complex, &order.facets)?;
    Ok(ShellingVerification::from_failure(
        &order.facets,
        first_failure_by_definition(&sets),
    ))
}

/// `R(σ_i)`: the vertices `v` with `σ_i ∖ {v}` in an earlier facet.
pub fn restriction_sets(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<Vec<Vec<VertexLabel>>> {
    let sets = order_sets(complex, &order.facets)?;
    if let Some(i) = first_failure(&sets) {
        return Err(Error::NotAShelling(i + 1));
    }
    Ok((0..sets.len())
        .map(|i| complex.labels_of(restriction_of(sets[i], sets[..i].iter())))
        .collect())
}

/// A set of facets singled out by a search constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetClass {
    /// Facets without flat vertices.
    Basis,
    /// Facets without ground vertices.
    MaximalFlag,
    Listed(Vec<Vec<VertexLabel>>),
}

impl FacetClass {
    pub fn contains(&self, facet: &[VertexLabel]) -> bool {
        match self {
            FacetClass::Basis => facet.iter().all(VertexLabel::is_ground),
            FacetClass::MaximalFlag => facet.iter().all(VertexLabel::is_flat),
            FacetClass::Listed(list) => list.iter().any(|l| {
                let mut l = l.clone();
                l.sort();
                l == facet
            }),
        }
    }
}

/// Restrictions on the orders a search may return.
///
/// `first` facets must all precede the others and `last` facets must all
/// follow the others; `prefix` fixes the opening facets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchConstraint {
    pub prefix: Vec<Vec<VertexLabel>>,
    pub first: Option<FacetClass>,
    pub last: Option<FacetClass>,
}

impl SearchConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn prefix(prefix: Vec<Vec<VertexLabel>>) -> Self {
        SearchConstraint {
            prefix,
            ..Self::default()
        }
    }

    pub fn class_first(class: FacetClass) -> Self {
        SearchConstraint {
            first: Some(class),
            ..Self::default()
        }
    }

    pub fn class_last(class: FacetClass) -> Self {
        SearchConstraint {
            last: Some(class),
            ..Self::default()
        }
    }

    pub fn and_first(mut self, class: FacetClass) -> Self {
        self.first = Some(class);
        self
    }

    pub fn and_last(mut self, class: FacetClass) -> Self {
        self.last = Some(class);
        self
    }

    pub fn is_unconstrained(&self) -> bool {
        self.prefix.is_empty() && self.first.is_none() && self.last.is_none()
    }
}

/// Outcome of [`find_shelling`]. `NoShelling` is only returned after the
/// search space has been exhausted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ShellingOrder),
    NoShelling,
    BudgetExhausted { expansions: u64 },
}

impl SearchOutcome {
    /// `Some(true)` / `Some(false)` for definite answers.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::NoShelling => Some(false),
            SearchOutcome::BudgetExhausted { .. } => None,
        }
    }
}

struct Exhausted;

struct ShellingSearch<'a> {
    facets: &'a [VertexSet],
    first: Vec<bool>,
    last: Vec<bool>,
    /// Only facets of maximal remaining size may be placed.
    by_size: bool,
    placed: Vec<u64>,
    order: Vec<usize>,
    dead: HashSet<Vec<u64>>,
    expansions: u64,
    budget: u64,
}

impl ShellingSearch<'_> {
    fn is_placed(&self, i: usize) -> bool {
        self.placed[i / 64] >> (i % 64) & 1 == 1
    }

    fn toggle(&mut self, i: usize) {
        self.placed[i / 64] ^= 1u64 << (i % 64);
    }

    fn allowed(&self, i: usize) -> bool {
        let n = self.facets.len();
        let unplaced = |j: &usize| !self.is_placed(*j);
        if !self.first[i] && (0..n).filter(unplaced).any(|j| self.first[j]) {
            return false;
        }
        if self.last[i] && (0..n).filter(unplaced).any(|j| j != i && !self.last[j]) {
            return false;
        }
        if self.by_size {
            let size = self.facets[i].len();
            if (0..n).filter(unplaced).any(|j| self.facets[j].len() > size) {
                return false;
            }
        }
        true
    }

    fn run(&mut self) -> std::result::Result<bool, Exhausted> {
        if self.order.len() == self.facets.len() {
            return Ok(true);
        }
        if self.dead.contains(&self.placed) {
            return Ok(false);
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Exhausted);
        }
        let earlier: Vec<VertexSet> = self.order.iter().map(|&j| self.facets[j]).collect();
        for i in 0..self.facets.len() {
            if self.is_placed(i) || !self.allowed(i) || !extends_shelling(self.facets[i], &earlier)
            {
                continue;
            }
            self.toggle(i);
            self.order.push(i);
            if self.run()? {
                return Ok(true);
            }
            self.order.pop();
            self.toggle(i);
        }
        self.dead.insert(self.placed.clone());
        Ok(false)
    }
}

/// Complexes with at most this many facets skip the link test.
const LINK_TEST_MIN_FACETS: usize = 6;

/// Every facet after the first needs a neighbor missing exactly one vertex.
fn has_two_isolated_facets(facets: &[VertexSet]) -> bool {
    let n = facets.len();
    n > 1
        && (0..n)
            .filter(|&i| !(0..n).any(|j| j != i && facets[i].difference(facets[j]).len() == 1))
            .count()
            > 1
}

/// Shared state for the vertex-link tests run ahead of a search.
struct LinkTest {
    verdicts: HashMap<SimplicialComplex, bool>,
    expansions: u64,
    budget: u64,
}

impl LinkTest {
    /// Links of shellable complexes are shellable.
    fn has_unshellable_link(
        &mut self,
        complex: &SimplicialComplex,
    ) -> std::result::Result<bool, Exhausted> {
        if complex.facet_count() <= LINK_TEST_MIN_FACETS {
            return Ok(false);
        }
        for label in complex.vertices() {
            let link = complex
                .link(std::slice::from_ref(label))
                .expect("vertices are faces");
            if link.facet_count() <= 1 {
                continue;
            }
            let verdict = match self.verdicts.get(&link) {
                Some(v) => *v,
                None => {
                    let v = self.is_shellable(&link)?;
                    self.verdicts.insert(link, v);
                    v
                }
            };
            if !verdict {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn is_shellable(
        &mut self,
        complex: &SimplicialComplex,
    ) -> std::result::Result<bool, Exhausted> {
        let facets = complex.facet_sets();
        if has_two_isolated_facets(facets) || self.has_unshellable_link(complex)? {
            return Ok(false);
        }
        let n = facets.len();
        let mut search = ShellingSearch {
            facets,
            first: vec![false; n],
            last: vec![false; n],
            by_size: true,
            placed: vec![0; n.div_ceil(64)],
            order: Vec::new(),
            dead: HashSet::new(),
            expansions: self.expansions,
            budget: self.budget,
        };
        let result = search.run();
        self.expansions = search.expansions;
        result
    }
}

/// Backtracking search for a shelling order satisfying `constraint`.
///
/// The placed facet set determines which facets can come next, so failed
/// sets are memoized. Without constraints the search only tries orders of
/// weakly decreasing facet size: any shelling can be rearranged that way.
/// Before searching, the links of all vertices are tested recursively, since
/// a complex with a non-shellable vertex link has no shelling. Expansions of
/// these inner searches count against `budget`.
pub fn find_shelling(
    complex: &SimplicialComplex,
    constraint: &SearchConstraint,
    budget: u64,
) -> Result<SearchOutcome> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets = complex.facet_sets();
    let n = facets.len();
    let labels: Vec<Vec<VertexLabel>> = complex.facets();
    let class_mask = |class: &Option<FacetClass>| -> Vec<bool> {
        labels
            .iter()
            .map(|f| class.as_ref().is_some_and(|c| c.contains(f)))
            .collect()
    };
    let mut search = ShellingSearch {
        facets,
        first: class_mask(&constraint.first),
        last: class_mask(&constraint.last),
        by_size: constraint.is_unconstrained(),
        placed: vec![0; n.div_ceil(64)],
        order: Vec::new(),
        dead: HashSet::new(),
        expansions: 0,
        budget,
    };

    let index: HashMap<VertexSet, usize> =
        facets.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut prefix_fails = false;
    for face in &constraint.prefix {
        let mut sorted = face.clone();
        sorted.sort();
        let i = complex
            .set_of(&sorted)
            .ok()
            .and_then(|s| index.get(&s).copied())
            .ok_or_else(|| {
                Error::NotAPermutation(format!("{} is not a facet", format_face(face)))
            })?;
        if search.is_placed(i) {
            return Err(Error::NotAPermutation(format!(
                "{} is listed twice",
                format_face(face)
            )));
        }
        let earlier: Vec<VertexSet> = search.order.iter().map(|&j| facets[j]).collect();
        prefix_fails |= !search.allowed(i) || !extends_shelling(facets[i], &earlier);
        search.toggle(i);
        search.order.push(i);
    }
    if prefix_fails || has_two_isolated_facets(facets) {
        return Ok(SearchOutcome::NoShelling);
    }

    let mut links = LinkTest {
        verdicts: HashMap::new(),
        expansions: 0,
        budget,
    };
    match links.has_unshellable_link(complex) {
        Ok(true) => return Ok(SearchOutcome::NoShelling),
        Ok(false) => {}
        Err(Exhausted) => return Ok(SearchOutcome::BudgetExhausted { expansions: budget }),
    }
    search.expansions = links.expansions;

    match search.run() {
        Ok(true) => Ok(SearchOutcome::Found(ShellingOrder::new(
            search.order.iter().map(|&i| labels[i].clone()).collect(),
        ))),
        Ok(false) => Ok(SearchOutcome::NoShelling),
        Err(Exhausted) => Ok(SearchOutcome::BudgetExhausted { expansions: budget }),
    }
}

/// Histogram of restriction-set sizes along a shelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionHistogram {
    /// `counts[i]` facets have a restriction set of size `i`.
    pub counts: Vec<u64>,
    pub pure: bool,
    /// h-vector computed from the f-vector.
    pub h_vector: Vec<i64>,
    /// Whether `counts` equals the h-vector; `None` for nonpure complexes,
    /// where the two need not agree.
    pub matches_h_vector: Option<bool>,
    pub warning: Option<String>,
}

pub fn h_from_shelling(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<RestrictionHistogram> {
    let restrictions = restriction_sets(complex, order)?;
    let h_vector = complex.h_vector()?;
    let mut counts = vec![0u64; h_vector.len()];
    for r in &restrictions {
        counts[r.len()] += 1;
    }
    let pure = complex.is_pure();
    let (matches_h_vector, warning) = if pure {
        let agree = counts.iter().zip(&h_vector).all(|(c, h)| *c as i64 == *h);
        (Some(agree), None)
    } else {
        (
            None,
            Some("NONPURE: restriction sizes need not give the h-vector".to_string()),
        )
    };
    Ok(RestrictionHistogram {
        counts,
        pure,
        h_vector,
        matches_h_vector,
        warning,
    })
}

/// JSON form of a checked shelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingReport {
    pub order: Vec<Vec<VertexLabel>>,
    pub restriction_sets: Vec<Vec<VertexLabel>>,
    pub verified: bool,
    pub h_from_restrictions: Vec<u64>,
}

pub fn shelling_report(
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<ShellingReport> {
    let verified = verify_shelling(complex, order)?.valid;
    let (restriction_sets, h_from_restrictions) = if verified {
        let h = h_from_shelling(complex, order)?;
        (restriction_sets(complex, order)?, h.counts)
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(ShellingReport {
        order: order.facets.clone(),
        restriction_sets,
        verified,
        h_from_restrictions,
    })
}

/// A total order on the independent sets refining inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    order: Vec<ElementSet>,
    position: HashMap<ElementSet, usize>,
}

impl LinearExtension {
    /// By cardinality, ties broken lexicographically.
    pub fn by_size_then_lex(f: &ClosureOperator) -> Result<Self> {
        let mut order = f.independent_sets()?;
        order.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        Self::from_order(f, order)
    }

    /// Checks that `order` lists every independent set once and that each set
    /// comes after all of its subsets.
    pub fn from_order(f: &ClosureOperator, order: Vec<ElementSet>) -> Result<Self> {
        let independent: HashSet<ElementSet> = f.independent_sets()?.into_iter().collect();
        let mut position = HashMap::with_capacity(order.len());
        for (i, set) in order.iter().enumerate() {
            if !independent.contains(set) {
                return Err(Error::NotALinearExtension(format!(
                    "{} is not independent",
                    f.format_set(*set)
                )));
            }
            if position.insert(*set, i).is_some() {
                return Err(Error::NotALinearExtension(format!(
                    "{} is listed twice",
                    f.format_set(*set)
                )));
            }
        }
        if position.len() != independent.len() {
            return Err(Error::NotALinearExtension(
                "some independent sets are missing".into(),
            ));
        }
        for (set, pos) in &position {
            for i in set.iter() {
                if position[&set.without(i)] > *pos {
                    return Err(Error::NotALinearExtension(format!(
                        "{} comes after {}",
                        f.format_set(set.without(i)),
                        f.format_set(*set)
                    )));
                }
            }
        }
        Ok(LinearExtension { order, position })
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.order
    }

    pub fn position(&self, set: ElementSet) -> Option<usize> {
        self.position.get(&set).copied()
    }

    pub fn is_size_monotone(&self) -> bool {
        self.order.windows(2).all(|w| w[0].len() <= w[1].len())
    }
}

/// A shelling of `B(f/F)` for every proper flat `F`, in the labels of the
/// contraction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlatShellings {
    orders: BTreeMap<ElementSet, ShellingOrder>,
}

impl FlatShellings {
    pub fn from_map(orders: BTreeMap<ElementSet, ShellingOrder>) -> Self {
        FlatShellings { orders }
    }

    /// Searches each `B(f/F)`, larger flats first.
    pub fn search(f: &ClosureOperator, budget: u64) -> Result<Self> {
        let mut flats = f.proper_flats();
        flats.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut orders = BTreeMap::new();
        for flat in flats {
            let complex = bergman_complex(&f.contraction(flat)?);
            match find_shelling(&complex, &SearchConstraint::none(), budget)? {
                SearchOutcome::Found(order) => {
                    orders.insert(flat, order);
                }
                SearchOutcome::NoShelling => {
                    return Err(Error::ContractionNotShellable(f.format_set(flat)))
                }
                SearchOutcome::BudgetExhausted { .. } => {
                    return Err(Error::BudgetExhausted(budget))
                }
            }
        }
        Ok(FlatShellings { orders })
    }

    pub fn get(&self, flat: ElementSet) -> Option<&ShellingOrder> {
        self.orders.get(&flat)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ElementSet, &ShellingOrder)> {
        self.orders.iter()
    }
}

/// A verified shelling of `B(f/F)` with facet positions and restriction sets.
struct IndexedFlatShelling {
    position: HashMap<Vec<VertexLabel>, usize>,
    restrictions: Vec<Vec<VertexLabel>>,
}

fn index_flat_shelling(
    f: &ClosureOperator,
    flat: ElementSet,
    flats: &FlatShellings,
) -> Result<IndexedFlatShelling> {
    let order = flats.get(flat).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no shelling supplied for flat {}",
            f.format_set(flat)
        ))
    })?;
    let complex = bergman_complex(&f.contraction(flat)?);
    let restrictions = restriction_sets(&complex, order).map_err(|e| {
        Error::InvalidArgument(format!(
            "supplied order for flat {} is not a shelling of its contraction: {e}",
            f.format_set(flat)
        ))
    })?;
    let position = order
        .facets
        .iter()
        .enumerate()
        .map(|(i, facet)| {
            let mut facet = facet.clone();
            facet.sort();
            (facet, i)
        })
        .collect();
    Ok(IndexedFlatShelling {
        position,
        restrictions,
    })
}

/// `F_2 ⊂ … ⊂ F_ℓ` as a face of `B(f/F_1)`, in the contraction's labels.
fn upper_flag_face(f: &ClosureOperator, face: &AugmentedFace) -> Vec<VertexLabel> {
    let flats = face.flag.flats();
    let first = flats[0];
    let mut labels: Vec<VertexLabel> = flats[1..]
        .iter()
        .map(|g| VertexLabel::Flat(f.names(g.difference(first))))
        .collect();
    labels.sort();
    labels
}

/// Orders the facets of the augmented Bergman complex by the extension on
/// independent sets, then by the position of `F_• ∖ F_1` in the shelling of
/// `B(f/F_1)`; facets with empty flag come last in lexicographic order.
///
/// The result is verified before it is returned and carries its restriction
/// sets.
pub fn flag_to_basis_shelling(
    f: &ClosureOperator,
    extension: &LinearExtension,
    flats: &FlatShellings,
) -> Result<ShellingOrder> {
    let complex = augmented_bergman(f)?;
    let facets = augmented_facets(f)?;
    let mut indexed: HashMap<ElementSet, IndexedFlatShelling> = HashMap::new();
    let mut keyed = Vec::new();
    let mut bases = Vec::new();
    for face in facets {
        let Some(first) = face.flag.first() else {
            bases.push(face.labels(f));
            continue;
        };
        let ext = extension.position(face.independent).ok_or_else(|| {
            Error::NotALinearExtension(format!(
                "{} is missing from the extension",
                f.format_set(face.independent)
            ))
        })?;
        if let std::collections::hash_map::Entry::Vacant(e) = indexed.entry(first) {
            e.insert(index_flat_shelling(f, first, flats)?);
        }
        let upper = upper_flag_face(f, &face);
        let pos = *indexed[&first].position.get(&upper).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{} is missing from the shelling of flat {}",
                format_face(&upper),
                f.format_set(first)
            ))
        })?;
        keyed.push(((ext, pos), face.labels(f)));
    }
    keyed.sort_by_key(|a| a.0);
    bases.sort();
    let mut order = ShellingOrder::new(keyed.into_iter().map(|(_, l)| l).chain(bases).collect());
    let sets = order_sets(&complex, &order.facets)?;
    if let Some(i) = first_failure(&sets) {
        return Err(Error::NotAShelling(i + 1));
    }
    order.restriction_sets = Some(restriction_sets(&complex, &order)?);
    Ok(order)
}

/// [`flag_to_basis_shelling`] with the size-then-lex extension and searched
/// flat shellings.
pub fn flag_to_basis_default(f: &ClosureOperator, budget: u64) -> Result<ShellingOrder> {
    let extension = LinearExtension::by_size_then_lex(f)?;
    let flats = FlatShellings::search(f, budget)?;
    flag_to_basis_shelling(f, &extension, &flats)
}

/// Restriction sets predicted for an order built by
/// [`flag_to_basis_shelling`]: `I ⊔ R(F_• ∖ F_1)` with the second part taken
/// in the shelling of `B(f/F_1)`, and just `I` for empty flags.
pub fn predicted_restriction_sets(
    f: &ClosureOperator,
    flats: &FlatShellings,
    order: &ShellingOrder,
) -> Result<Vec<Vec<VertexLabel>>> {
    let mut indexed: HashMap<ElementSet, IndexedFlatShelling> = HashMap::new();
    let mut out = Vec::with_capacity(order.len());
    for facet in &order.facets {
        let face = AugmentedFace::from_labels(f, facet)?;
        let mut labels: Vec<VertexLabel> = face
            .independent
            .iter()
            .map(|i| ground_label(f, i))
            .collect();
        if let Some(first) = face.flag.first() {
            if let std::collections::hash_map::Entry::Vacant(e) = indexed.entry(first) {
                e.insert(index_flat_shelling(f, first, flats)?);
            }
            let entry = &indexed[&first];
            let upper = upper_flag_face(f, &face);
            let pos = *entry.position.get(&upper).ok_or_else(|| {
                Error::InvalidArgument(format!("{} is not a facet", format_face(&upper)))
            })?;
            let base = f.names(first);
            for label in &entry.restrictions[pos] {
                if let VertexLabel::Flat(names) = label {
                    labels.push(VertexLabel::flat(names.iter().chain(base.iter()).cloned()));
                }
            }
        }
        labels.sort();
        out.push(labels);
    }
    Ok(out)
}

fn trimmed(poly: &[i64]) -> &[i64] {
    let len = poly.iter().rposition(|c| *c != 0).map_or(0, |i| i + 1);
    &poly[..len]
}

fn add_shifted(acc: &mut Vec<i64>, poly: &[i64], shift: usize) {
    if acc.len() < poly.len() + shift {
        acc.resize(poly.len() + shift, 0);
    }
    for (i, c) in poly.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Comparison of `Σ_I t^{|I|} h(B(f/f(I)), t)` with the h-polynomial of the
/// augmented Bergman complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFormulaReport {
    /// Coefficients of the sum over independent sets.
    pub formula: Vec<i64>,
    /// h-vector of the augmented Bergman complex.
    pub actual: Vec<i64>,
    pub agree: bool,
    pub formula_nonnegative: bool,
    pub augmented_pure: bool,
    /// Purity of every `B(f/f(I))` with `f(I)` proper.
    pub contractions_pure: bool,
}

pub fn augmented_h_formula(f: &ClosureOperator) -> Result<HFormulaReport> {
    let full = f.full();
    let mut cache: HashMap<ElementSet, (Vec<i64>, bool)> = HashMap::new();
    let mut formula = Vec::new();
    let mut contractions_pure = true;
    for set in f.independent_sets()? {
        let closed = f.closure(set);
        if closed == full {
            add_shifted(&mut formula, &[1], set.len());
            continue;
        }
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(closed) {
            let b = bergman_complex(&f.contraction(closed)?);
            e.insert((b.h_vector()?, b.is_pure()));
        }
        let (h, pure) = &cache[&closed];
        contractions_pure &= *pure;
        add_shifted(&mut formula, h, set.len());
    }
    let complex = augmented_bergman(f)?;
    let actual = complex.h_vector()?;
    Ok(HFormulaReport {
        agree: trimmed(&formula) == trimmed(&actual),
        formula_nonnegative: formula.iter().all(|c| *c >= 0),
        augmented_pure: complex.is_pure(),
        contractions_pure,
        formula,
        actual,
    })
}

/// Verdicts on the four equivalent shellability conditions; `None` marks a
/// condition whose search ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// The Bergman complex is shellable.
    pub bergman_shellable: Option<bool>,
    /// Every `B(f/F)` for proper `F` is shellable.
    pub contractions_shellable: Option<bool>,
    /// The augmented complex has a shelling with maximal flags first and
    /// bases last.
    pub flags_first_bases_last: Option<bool>,
    /// The augmented complex is shellable.
    pub augmented_shellable: Option<bool>,
    /// A flat whose contraction has a non-shellable Bergman complex.
    pub witness_flat: Option<Vec<String>>,
    /// `None` when some verdict is unknown.
    pub all_agree: Option<bool>,
}

pub fn theorem_equivalence_report(f: &ClosureOperator, budget: u64) -> Result<EquivalenceReport> {
    let none = SearchConstraint::none();
    let bergman_shellable = find_shelling(&bergman_complex(f), &none, budget)?.verdict();

    let mut flats = f.proper_flats();
    flats.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut orders = BTreeMap::new();
    let mut contractions_shellable = Some(true);
    let mut witness_flat = None;
    for flat in flats {
        let complex = bergman_complex(&f.contraction(flat)?);
        match find_shelling(&complex, &none, budget)? {
            SearchOutcome::Found(order) => {
                orders.insert(flat, order);
            }
            SearchOutcome::NoShelling => {
                contractions_shellable = Some(false);
                witness_flat = Some(f.names(flat));
                break;
            }
            SearchOutcome::BudgetExhausted { .. } => contractions_shellable = None,
        }
    }

    let complex = augmented_bergman(f)?;
    let flags_first_bases_last = if contractions_shellable == Some(true) {
        let extension = LinearExtension::by_size_then_lex(f)?;
        let order = flag_to_basis_shelling(f, &extension, &FlatShellings::from_map(orders))?;
        Some(verify_shelling(&complex, &order)?.valid)
    } else {
        let constraint =
            SearchConstraint::class_first(FacetClass::MaximalFlag).and_last(FacetClass::Basis);
        find_shelling(&complex, &constraint, budget)?.verdict()
    };
    let augmented_shellable = if flags_first_bases_last == Some(true) {
        Some(true)
    } else {
        find_shelling(&complex, &none, budget)?.verdict()
    };

    let verdicts = [
        bergman_shellable,
        contractions_shellable,
        flags_first_bases_last,
        augmented_shellable,
    ];
    let all_agree = if verdicts.iter().all(Option::is_some) {
        Some(verdicts.windows(2).all(|w| w[0] == w[1]))
    } else {
        None
    };
    Ok(EquivalenceReport {
        bergman_shellable,
        contractions_shellable,
        flags_first_bases_last,
        augmented_shellable,
        witness_flat,
        all_agree,
    })
}
