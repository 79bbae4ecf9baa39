//! The Bergman, independence and augmented Bergman complexes of a closure
//! operator, and the subcomplexes and factorizations built from them.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::closure::{ClosureOperator, ElementSet, Flag};
use crate::complex::{SimplicialComplex, VertexLabel};
use crate::error::{Error, Result};

pub fn ground_label(f: &ClosureOperator, element: usize) -> VertexLabel {
    VertexLabel::Ground(f.ground_set()[element].clone())
}

pub fn flat_label(f: &ClosureOperator, flat: ElementSet) -> VertexLabel {
    // ground sets are sorted, so names come out sorted
    VertexLabel::Flat(f.names(flat))
}

/// Upper covers of every flat, computed once.
pub(crate) struct CoverTable {
    covers: HashMap<ElementSet, Vec<ElementSet>>,
    full: ElementSet,
}

impl CoverTable {
    pub(crate) fn new(f: &ClosureOperator) -> Self {
        let covers = f
            .flats()
            .iter()
            .map(|flat| (*flat, f.upper_covers(*flat)))
            .collect();
        CoverTable {
            covers,
            full: f.full(),
        }
    }

    /// Saturated chains `start ⋖ F_2 ⋖ … ⋖ F_ℓ ⋖ E` of proper flats.
    pub(crate) fn saturated_chains(&self, start: ElementSet) -> Vec<Vec<ElementSet>> {
        let mut out = Vec::new();
        if start != self.full {
            let mut chain = vec![start];
            self.extend(&mut chain, &mut out);
        }
        out
    }

    fn extend(&self, chain: &mut Vec<ElementSet>, out: &mut Vec<Vec<ElementSet>>) {
        let last = *chain.last().expect("nonempty chain");
        for next in &self.covers[&last] {
            if *next == self.full {
                out.push(chain.clone());
            } else {
                chain.push(*next);
                self.extend(chain, out);
                chain.pop();
            }
        }
    }
}

/// Order complex of the flats strictly between `f(∅)` and `E`; `{∅}` when
/// there are none.
pub fn bergman_complex(f: &ClosureOperator) -> SimplicialComplex {
    let table = CoverTable::new(f);
    let bottom = f.bottom();
    if bottom == f.full() {
        return SimplicialComplex::empty();
    }
    let chains: Vec<Vec<ElementSet>> = f
        .upper_covers(bottom)
        .into_iter()
        .filter(|atom| *atom != f.full())
        .flat_map(|atom| table.saturated_chains(atom))
        .collect();
    if chains.is_empty() {
        return SimplicialComplex::empty();
    }
    SimplicialComplex::from_facets(
        chains
            .iter()
            .map(|chain| chain.iter().map(|s| flat_label(f, *s)).collect::<Vec<_>>()),
    )
    .expect("flat labels are well formed")
}

/// The Bergman complex coned over `x_{f(∅)}`.
pub fn cone_bergman(f: &ClosureOperator) -> Result<SimplicialComplex> {
    let bottom = f.bottom();
    if bottom == f.full() {
        return Err(Error::InvalidArgument(
            "f(∅) = E, so there is no cone vertex".into(),
        ));
    }
    bergman_complex(f).join(&SimplicialComplex::simplex([flat_label(f, bottom)])?)
}

/// Complex of independent sets on the `y` labels.
pub fn independence_complex(f: &ClosureOperator) -> Result<SimplicialComplex> {
    let maximal = f.maximal_independent_sets()?;
    SimplicialComplex::from_facets(
        maximal
            .iter()
            .map(|set| set.iter().map(|i| ground_label(f, i)).collect::<Vec<_>>()),
    )
}

/// A face `(I, F_•)` of the augmented Bergman complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AugmentedFace {
    pub independent: ElementSet,
    pub flag: Flag,
}

impl AugmentedFace {
    pub fn new(f: &ClosureOperator, independent: ElementSet, flag: Flag) -> Result<Self> {
        if !f.is_independent(independent) {
            return Err(Error::InvalidArgument(format!(
                "{} is not independent",
                f.format_set(independent)
            )));
        }
        if let Some(first) = flag.first() {
            if !independent.is_subset(first) {
                return Err(Error::InvalidArgument(format!(
                    "{} is not contained in {}",
                    f.format_set(independent),
                    f.format_set(first)
                )));
            }
        }
        Ok(AugmentedFace { independent, flag })
    }

    /// Sorted vertex labels: `y_i` for `i ∈ I`, then `x_F` along the flag.
    pub fn labels(&self, f: &ClosureOperator) -> Vec<VertexLabel> {
        let mut labels: Vec<VertexLabel> = self
            .independent
            .iter()
            .map(|i| ground_label(f, i))
            .chain(self.flag.flats().iter().map(|s| flat_label(f, *s)))
            .collect();
        labels.sort();
        labels
    }

    pub fn from_labels(f: &ClosureOperator, labels: &[VertexLabel]) -> Result<Self> {
        let mut independent = Vec::new();
        let mut flats = Vec::new();
        for label in labels {
            match label {
                VertexLabel::Ground(name) => independent.push(name.clone()),
                VertexLabel::Flat(names) => flats.push(f.set_of(names)?),
            }
        }
        flats.sort_by_key(|s| s.len());
        let flag = Flag::new(f, flats)?;
        Self::new(f, f.set_of(&independent)?, flag)
    }

    /// Human notation `(I | F_1 ⊂ F_2 ⊂ …)`.
    pub fn display(&self, f: &ClosureOperator) -> String {
        let flags: Vec<String> = self.flag.flats().iter().map(|s| f.format_set(*s)).collect();
        format!(
            "({} | {})",
            f.format_set(self.independent),
            flags.join(" ⊂ ")
        )
    }
}

/// Facets of the augmented Bergman complex by direct enumeration.
///
/// For every independent `I`: if `f(I) = E` it is a facet with empty flag,
/// otherwise each saturated chain from `f(I)` to a coatom completes it to a
/// facet. Every facet arises this way exactly once.
pub fn augmented_facets(f: &ClosureOperator) -> Result<Vec<AugmentedFace>> {
    let table = CoverTable::new(f);
    let full = f.full();
    let mut out = Vec::new();
    for independent in f.independent_sets()? {
        let closed = f.closure(independent);
        if closed == full {
            out.push(AugmentedFace {
                independent,
                flag: Flag::empty(),
            });
        } else {
            for chain in table.saturated_chains(closed) {
                out.push(AugmentedFace {
                    independent,
                    flag: Flag::from_chain_unchecked(chain),
                });
            }
        }
    }
    Ok(out)
}

pub fn augmented_bergman(f: &ClosureOperator) -> Result<SimplicialComplex> {
    let facets = augmented_facets(f)?;
    SimplicialComplex::from_facets(facets.iter().map(|face| face.labels(f)))
}

/// Same complex as [`augmented_bergman`], generated from every face
/// `(I, F_•)` with `f(I) ⊆ F_1` and reduced to maximal faces. Exponential;
/// kept as an independent check of the facet enumeration.
pub fn augmented_bergman_brute_force(f: &ClosureOperator) -> Result<SimplicialComplex> {
    let independent = f.independent_sets()?;
    let mut proper = f.proper_flats();
    proper.sort_by_key(|s| s.len());
    let mut chains: Vec<Vec<ElementSet>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<ElementSet>> = proper.iter().map(|s| vec![*s]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for chain in &frontier {
            let top = *chain.last().expect("nonempty");
            for g in proper.iter().filter(|g| top.is_proper_subset(**g)) {
                let mut longer = chain.clone();
                longer.push(*g);
                next.push(longer);
            }
        }
        chains.append(&mut frontier);
        frontier = next;
    }
    let mut faces = Vec::new();
    for set in &independent {
        let closed = f.closure(*set);
        for chain in &chains {
            if chain.first().is_none_or(|first| closed.is_subset(*first)) {
                let face = AugmentedFace {
                    independent: *set,
                    flag: Flag::from_chain_unchecked(chain.clone()),
                };
                faces.push(face.labels(f));
            }
        }
    }
    SimplicialComplex::from_facets(faces)
}

/// Checks that `family` consists of proper flats and is closed upward among
/// proper flats.
pub fn check_upper_set(f: &ClosureOperator, family: &[ElementSet]) -> Result<()> {
    for flat in family {
        if !f.is_proper_flat(*flat) {
            return Err(Error::NotProperFlat(f.format_set(*flat)));
        }
    }
    let proper = f.proper_flats();
    for lower in family {
        for upper in proper.iter().filter(|g| lower.is_proper_subset(**g)) {
            if !family.contains(upper) {
                return Err(Error::NotUpperSet {
                    lower: f.format_set(*lower),
                    upper: f.format_set(*upper),
                });
            }
        }
    }
    Ok(())
}

/// The subcomplex of the augmented Bergman complex of a matroid induced on
/// all `y` vertices and the `x_F` with `F` in the upper-set `family`.
pub fn augmented_upperset(m: &ClosureOperator, family: &[ElementSet]) -> Result<SimplicialComplex> {
    m.require_matroid()?;
    check_upper_set(m, family)?;
    let full = augmented_bergman(m)?;
    let keep: Vec<VertexLabel> = full
        .vertices()
        .iter()
        .filter(|label| match label {
            VertexLabel::Ground(_) => true,
            VertexLabel::Flat(names) => family.iter().any(|s| m.names(*s) == *names),
        })
        .cloned()
        .collect();
    full.induced(&keep)
}

/// Maps the flat labels of a complex built from `f/F` back to the flats of
/// `f` they came from (`x_{G∖F} ↦ x_G`).
pub(crate) fn contraction_relabeling(
    f: &ClosureOperator,
    flat: ElementSet,
    complex: &SimplicialComplex,
) -> BTreeMap<VertexLabel, VertexLabel> {
    let base = f.names(flat);
    complex
        .vertices()
        .iter()
        .filter_map(|label| match label {
            VertexLabel::Flat(names) => Some((
                label.clone(),
                VertexLabel::flat(names.iter().chain(base.iter()).cloned()),
            )),
            VertexLabel::Ground(_) => None,
        })
        .collect()
}

/// The two factors of the link of `x_F` in the augmented Bergman complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFactorization {
    /// Sends every vertex of `left` and `right` to its name in the augmented
    /// Bergman complex of `f`.
    pub relabeling: BTreeMap<VertexLabel, VertexLabel>,
    /// Augmented Bergman complex of `f|_F`.
    pub left: SimplicialComplex,
    /// Bergman complex of `f/F`, in the contraction's own labels.
    pub right: SimplicialComplex,
}

impl LinkFactorization {
    pub fn relabeled_join(&self) -> Result<SimplicialComplex> {
        self.left
            .relabel(&self.relabeling)?
            .join(&self.right.relabel(&self.relabeling)?)
    }
}

pub fn link_factorization(f: &ClosureOperator, flat: ElementSet) -> Result<LinkFactorization> {
    if !f.is_proper_flat(flat) {
        return Err(Error::NotProperFlat(f.format_set(flat)));
    }
    let left = augmented_bergman(&f.restriction(flat)?)?;
    let right = bergman_complex(&f.contraction(flat)?);
    let mut relabeling: BTreeMap<VertexLabel, VertexLabel> = left
        .vertices()
        .iter()
        .map(|l| (l.clone(), l.clone()))
        .collect();
    relabeling.extend(contraction_relabeling(f, flat, &right));
    Ok(LinkFactorization {
        relabeling,
        left,
        right,
    })
}

/// Facets of the augmented Bergman complex split by vertex kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layers {
    /// Facets without `y` vertices.
    pub flag: Vec<Vec<VertexLabel>>,
    /// Facets with both kinds of vertex.
    pub hybrid: Vec<Vec<VertexLabel>>,
    /// Facets without `x` vertices.
    pub independent: Vec<Vec<VertexLabel>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayersDocument {
    pub layers: Layers,
}

pub fn layers(f: &ClosureOperator) -> Result<Layers> {
    let mut out = Layers::default();
    for facet in augmented_bergman(f)?.facets() {
        let has_y = facet.iter().any(VertexLabel::is_ground);
        let has_x = facet.iter().any(VertexLabel::is_flat);
        match (has_y, has_x) {
            (false, _) => out.flag.push(facet),
            (true, true) => out.hybrid.push(facet),
            (true, false) => out.independent.push(facet),
        }
    }
    Ok(out)
}
