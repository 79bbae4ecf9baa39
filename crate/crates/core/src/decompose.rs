//! Vertex decomposability: certificate search and checking, the constructive
//! decomposition of augmented Bergman complexes of matroids, and shellings
//! read off from certificates.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bergman::{
    bergman_complex, check_upper_set, contraction_relabeling, independence_complex, AugmentedFace,
};
use crate::closure::{ClosureOperator, ElementSet, Flag};
use crate::complex::{
    deletion_facets, format_face, link_facets, SimplicialComplex, VertexLabel, VertexSet,
};
use crate::error::{Error, Result};
use crate::shelling::{verify_shelling, ShellingOrder};

/// Node expansions allowed to a decomposition search by default.
pub const DEFAULT_VD_BUDGET: u64 = 10_000_000;

/// A vertex decomposition: a simplex, or a shedding vertex with
/// decompositions of its deletion and link.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CertificateRepr", into = "CertificateRepr")]
pub enum DecompositionCertificate {
    Leaf,
    Node {
        vertex: VertexLabel,
        deletion: Box<DecompositionCertificate>,
        link: Box<DecompositionCertificate>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum CertificateRepr {
    Leaf {
        leaf: bool,
    },
    Node {
        vertex: VertexLabel,
        del: Box<DecompositionCertificate>,
        link: Box<DecompositionCertificate>,
    },
}

impl TryFrom<CertificateRepr> for DecompositionCertificate {
    type Error = String;

    fn try_from(repr: CertificateRepr) -> std::result::Result<Self, String> {
        match repr {
            CertificateRepr::Leaf { leaf: true } => Ok(DecompositionCertificate::Leaf),
            CertificateRepr::Leaf { leaf: false } => Err("`leaf` must be true".into()),
            CertificateRepr::Node { vertex, del, link } => Ok(DecompositionCertificate::Node {
                vertex,
                deletion: del,
                link,
            }),
        }
    }
}

impl From<DecompositionCertificate> for CertificateRepr {
    fn from(cert: DecompositionCertificate) -> Self {
        match cert {
            DecompositionCertificate::Leaf => CertificateRepr::Leaf { leaf: true },
            DecompositionCertificate::Node {
                vertex,
                deletion,
                link,
            } => CertificateRepr::Node {
                vertex,
                del: deletion,
                link,
            },
        }
    }
}

impl DecompositionCertificate {
    pub fn node(vertex: VertexLabel, deletion: Self, link: Self) -> Self {
        DecompositionCertificate::Node {
            vertex,
            deletion: Box::new(deletion),
            link: Box::new(link),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, DecompositionCertificate::Leaf)
    }

    pub fn root_vertex(&self) -> Option<&VertexLabel> {
        match self {
            DecompositionCertificate::Leaf => None,
            DecompositionCertificate::Node { vertex, .. } => Some(vertex),
        }
    }

    /// Equals the number of facets of the certified complex.
    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionCertificate::Leaf => 1,
            DecompositionCertificate::Node { deletion, link, .. } => {
                deletion.leaf_count() + link.leaf_count()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionCertificate::Leaf => 0,
            DecompositionCertificate::Node { deletion, link, .. } => {
                1 + deletion.depth().max(link.depth())
            }
        }
    }

    /// Renames node vertices; labels missing from `map` are kept.
    pub fn relabel(&self, map: &std::collections::BTreeMap<VertexLabel, VertexLabel>) -> Self {
        match self {
            DecompositionCertificate::Leaf => DecompositionCertificate::Leaf,
            DecompositionCertificate::Node {
                vertex,
                deletion,
                link,
            } => Self::node(
                map.get(vertex).unwrap_or(vertex).clone(),
                deletion.relabel(map),
                link.relabel(map),
            ),
        }
    }
}

/// Result of [`is_shedding_vertex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheddingCheck {
    pub shedding: bool,
    /// A facet of the deletion that is not a facet of the complex.
    pub witness: Option<Vec<VertexLabel>>,
}

fn shedding_witness(facets: &[VertexSet], vertex: usize) -> Option<VertexSet> {
    deletion_facets(facets, VertexSet::singleton(vertex))
        .into_iter()
        .find(|d| !facets.contains(d))
}

/// Whether every facet of `{τ ∖ v}` is already a facet of the complex.
pub fn is_shedding_vertex(
    complex: &SimplicialComplex,
    vertex: &VertexLabel,
) -> Result<SheddingCheck> {
    let index = complex
        .index_of(vertex)
        .ok_or_else(|| Error::UnknownVertex(vertex.to_string()))?;
    let witness = shedding_witness(complex.facet_sets(), index).map(|w| complex.labels_of(w));
    Ok(SheddingCheck {
        shedding: witness.is_none(),
        witness,
    })
}

/// Outcome of [`is_vertex_decomposable`]. `NotDecomposable` is only returned
/// after every choice of shedding vertex has been tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VdOutcome {
    Decomposable(DecompositionCertificate),
    NotDecomposable,
    BudgetExhausted { expansions: u64 },
}

struct Exhausted;

struct VdSearch<'a> {
    table: &'a [VertexLabel],
    memo: HashMap<Vec<VertexSet>, Option<DecompositionCertificate>>,
    expansions: u64,
    budget: u64,
}

impl VdSearch<'_> {
    fn run(
        &mut self,
        facets: Vec<VertexSet>,
    ) -> std::result::Result<Option<DecompositionCertificate>, Exhausted> {
        if facets.len() == 1 {
            return Ok(Some(DecompositionCertificate::Leaf));
        }
        if let Some(known) = self.memo.get(&facets) {
            return Ok(known.clone());
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Exhausted);
        }
        let vertices = facets.iter().fold(VertexSet::empty(), |a, f| a.union(*f));
        let mut found = None;
        for v in vertices.iter() {
            if shedding_witness(&facets, v).is_some() {
                continue;
            }
            let single = VertexSet::singleton(v);
            let Some(deletion) = self.run(deletion_facets(&facets, single))? else {
                continue;
            };
            let Some(link) = self.run(link_facets(&facets, single))? else {
                continue;
            };
            found = Some(DecompositionCertificate::node(
                self.table[v].clone(),
                deletion,
                link,
            ));
            break;
        }
        self.memo.insert(facets, found.clone());
        Ok(found)
    }
}

/// Memoized search over shedding vertices, tried in label order. The
/// certificate returned is rooted at the least vertex that works.
pub fn is_vertex_decomposable(complex: &SimplicialComplex, budget: u64) -> Result<VdOutcome> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut search = VdSearch {
        table: complex.vertices(),
        memo: HashMap::new(),
        expansions: 0,
        budget,
    };
    Ok(match search.run(complex.facet_sets().to_vec()) {
        Ok(Some(cert)) => VdOutcome::Decomposable(cert),
        Ok(None) => VdOutcome::NotDecomposable,
        Err(Exhausted) => VdOutcome::BudgetExhausted { expansions: budget },
    })
}

/// Where a certificate check failed: the `del`/`link` steps from the root and
/// the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFailure {
    pub path: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub valid: bool,
    pub failure: Option<CertificateFailure>,
    /// A leaf was accepted for the void complex.
    pub void_leaf: bool,
}

fn check_node(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
    path: &mut Vec<String>,
    void_leaf: &mut bool,
) -> std::result::Result<(), CertificateFailure> {
    let fail = |path: &Vec<String>, reason: String| CertificateFailure {
        path: path.clone(),
        reason,
    };
    match cert {
        DecompositionCertificate::Leaf => {
            if complex.is_void() {
                *void_leaf = true;
                Ok(())
            } else if complex.facet_count() == 1 {
                Ok(())
            } else {
                Err(fail(
                    path,
                    format!("leaf at a complex with {} facets", complex.facet_count()),
                ))
            }
        }
        DecompositionCertificate::Node {
            vertex,
            deletion,
            link,
        } => {
            let check = is_shedding_vertex(complex, vertex)
                .map_err(|_| fail(path, format!("{vertex} is not a vertex")))?;
            if let Some(witness) = check.witness {
                return Err(fail(
                    path,
                    format!(
                        "{vertex} is not shedding: {} is a facet of the deletion only",
                        format_face(&witness)
                    ),
                ));
            }
            let face = std::slice::from_ref(vertex);
            path.push("del".into());
            check_node(
                &complex.deletion(face).expect("vertex"),
                deletion,
                path,
                void_leaf,
            )?;
            path.pop();
            path.push("link".into());
            check_node(&complex.link(face).expect("vertex"), link, path, void_leaf)?;
            path.pop();
            Ok(())
        }
    }
}

/// Checks both conditions of a vertex decomposition at every node.
pub fn check_certificate(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> CertificateCheck {
    let mut void_leaf = false;
    let result = check_node(complex, cert, &mut Vec::new(), &mut void_leaf);
    CertificateCheck {
        valid: result.is_ok(),
        failure: result.err(),
        void_leaf,
    }
}

/// Certificate for `Δ ∗ Γ`: the vertices of `Δ` are decomposed first, then
/// every leaf is replaced by the certificate of `Γ`.
pub fn join_certificates(
    left: &DecompositionCertificate,
    right: &DecompositionCertificate,
) -> DecompositionCertificate {
    match left {
        DecompositionCertificate::Leaf => right.clone(),
        DecompositionCertificate::Node {
            vertex,
            deletion,
            link,
        } => DecompositionCertificate::node(
            vertex.clone(),
            join_certificates(deletion, right),
            join_certificates(link, right),
        ),
    }
}

fn collect_shelling(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
    out: &mut Vec<Vec<VertexLabel>>,
) {
    match cert {
        DecompositionCertificate::Leaf => out.extend(complex.facets()),
        DecompositionCertificate::Node {
            vertex,
            deletion,
            link,
        } => {
            let face = std::slice::from_ref(vertex);
            collect_shelling(&complex.deletion(face).expect("vertex"), deletion, out);
            let start = out.len();
            collect_shelling(&complex.link(face).expect("vertex"), link, out);
            for facet in &mut out[start..] {
                facet.push(vertex.clone());
                facet.sort();
            }
        }
    }
}

/// The deletion's shelling followed by the link's shelling coned with the
/// vertex, recursively.
pub fn shelling_from_certificate(
    complex: &SimplicialComplex,
    cert: &DecompositionCertificate,
) -> Result<ShellingOrder> {
    let check = check_certificate(complex, cert);
    if let Some(failure) = check.failure {
        return Err(Error::InvalidCertificate(format!(
            "{} at /{}",
            failure.reason,
            failure.path.join("/")
        )));
    }
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut facets = Vec::new();
    collect_shelling(complex, cert, &mut facets);
    let order = ShellingOrder::new(facets);
    let verdict = verify_shelling(complex, &order)?;
    match verdict.failed_at {
        Some(i) => Err(Error::NotAShelling(i)),
        None => Ok(order),
    }
}

/// Decomposes a matroid independence complex by repeatedly shedding the
/// least vertex that lies outside some facet. Such a vertex is not a coloop,
/// so its deletion keeps only bases as facets.
fn independence_certificate(complex: &SimplicialComplex) -> Result<DecompositionCertificate> {
    if complex.facet_count() <= 1 {
        return Ok(DecompositionCertificate::Leaf);
    }
    let facets = complex.facet_sets();
    let all = facets.iter().fold(VertexSet::empty(), |a, f| a.union(*f));
    let common = facets.iter().fold(all, |a, f| a.intersection(*f));
    let v = all
        .difference(common)
        .iter()
        .next()
        .expect("two facets differ somewhere");
    if shedding_witness(facets, v).is_some() {
        return Err(Error::NotAMatroid(format!(
            "{} is not a shedding vertex of the independence complex",
            complex.vertices()[v]
        )));
    }
    let face = [complex.vertices()[v].clone()];
    Ok(DecompositionCertificate::node(
        face[0].clone(),
        independence_certificate(&complex.deletion(&face)?)?,
        independence_certificate(&complex.link(&face)?)?,
    ))
}

fn minimal_flat(family: &[ElementSet]) -> Option<ElementSet> {
    family
        .iter()
        .copied()
        .filter(|f| !family.iter().any(|g| g.is_proper_subset(*f)))
        .min()
}

fn matroid_certificate(
    m: &ClosureOperator,
    family: &[ElementSet],
    budget: u64,
) -> Result<DecompositionCertificate> {
    let Some(first) = minimal_flat(family) else {
        return independence_certificate(&independence_complex(m)?);
    };
    let rest: Vec<ElementSet> = family.iter().copied().filter(|f| *f != first).collect();
    let deletion = matroid_certificate(m, &rest, budget)?;

    let left = independence_certificate(&independence_complex(&m.restriction(first)?)?)?;
    let bergman = bergman_complex(&m.contraction(first)?);
    let right = match is_vertex_decomposable(&bergman, budget)? {
        VdOutcome::Decomposable(cert) => cert.relabel(&contraction_relabeling(m, first, &bergman)),
        VdOutcome::NotDecomposable => {
            return Err(Error::NotAMatroid(format!(
                "the Bergman complex of the contraction by {} is not vertex decomposable",
                m.format_set(first)
            )))
        }
        VdOutcome::BudgetExhausted { .. } => return Err(Error::BudgetExhausted(budget)),
    };
    Ok(DecompositionCertificate::node(
        crate::bergman::flat_label(m, first),
        deletion,
        join_certificates(&left, &right),
    ))
}

/// Certificate for the subcomplex of the augmented Bergman complex of `m`
/// on all ground vertices and the flats in the upper-set `family`.
///
/// The root sheds `x_F` for the least minimal flat `F` of the family. Its
/// deletion is handled by recursion on the smaller family and its link is
/// the join of the independence complex of `m|_F` with the Bergman complex
/// of `m/F`.
pub fn matroid_vd_certificate(
    m: &ClosureOperator,
    family: &[ElementSet],
    budget: u64,
) -> Result<DecompositionCertificate> {
    m.require_matroid()?;
    check_upper_set(m, family)?;
    let mut family = family.to_vec();
    family.sort();
    family.dedup();
    matroid_certificate(m, &family, budget)
}

/// Every upper-set of proper flats of `f`, each sorted, in lexicographic
/// order of their sorted flat lists.
pub fn upper_sets(f: &ClosureOperator) -> Vec<Vec<ElementSet>> {
    let flats = f.proper_flats();
    let mut out = vec![Vec::new()];
    // an upper-set is the up-closure of its antichain of minimal elements
    let mut seen = std::collections::BTreeSet::new();
    let n = flats.len();
    let mut stack: Vec<(usize, Vec<ElementSet>)> = vec![(0, Vec::new())];
    while let Some((start, antichain)) = stack.pop() {
        for i in start..n {
            let candidate = flats[i];
            if antichain
                .iter()
                .any(|a| a.is_subset(candidate) || candidate.is_subset(*a))
            {
                continue;
            }
            let mut next = antichain.clone();
            next.push(candidate);
            let mut closed: Vec<ElementSet> = flats
                .iter()
                .copied()
                .filter(|g| next.iter().any(|a| a.is_subset(*g)))
                .collect();
            closed.sort();
            if seen.insert(closed.clone()) {
                out.push(closed);
            }
            stack.push((i + 1, next));
        }
    }
    out.sort();
    out
}

/// The face supplied by the shedding step for `x_F` in the matroid case.
///
/// `face` must contain `x_F` with `F` its least flat. If the flag is just
/// `(F)`, some `a` extends `I` to an independent set and the result is
/// `(I ∪ a, ∅)`; otherwise `a` is taken from `F_2 ∖ I` and the result is
/// `(I ∪ a, F_2 ⊂ … )`. Either way the result omits exactly `x_F` from
/// `face`.
pub fn shedding_step_witness(m: &ClosureOperator, face: &AugmentedFace) -> Result<AugmentedFace> {
    m.require_matroid()?;
    let flats = face.flag.flats();
    if flats.is_empty() {
        return Err(Error::InvalidArgument("the flag is empty".into()));
    }
    let independent = face.independent;
    let pool = if flats.len() == 1 { m.full() } else { flats[1] };
    let a = pool
        .difference(independent)
        .iter()
        .find(|a| m.is_independent(independent.with(*a)))
        .ok_or_else(|| {
            Error::NotAMatroid(format!(
                "{} cannot be extended inside {}",
                m.format_set(independent),
                m.format_set(pool)
            ))
        })?;
    let flag = Flag::new(m, flats[1..].to_vec())?;
    AugmentedFace::new(m, independent.with(a), flag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bergman::{augmented_bergman, augmented_upperset};

    fn uniform(rank: usize, n: usize) -> ClosureOperator {
        let ground: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        ClosureOperator::uniform_matroid(rank, &ground).unwrap()
    }

    fn g(name: &str) -> VertexLabel {
        VertexLabel::ground(name)
    }

    fn complex(faces: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.iter().map(|n| g(n)))).unwrap()
    }

    #[test]
    fn simplex_is_a_leaf() {
        let c = complex(&[&["a", "b", "c"]]);
        assert_eq!(
            is_vertex_decomposable(&c, 10).unwrap(),
            VdOutcome::Decomposable(DecompositionCertificate::Leaf)
        );
        // a simplex needs no shedding vertex, and has none
        let check = is_shedding_vertex(&c, &g("a")).unwrap();
        assert!(!check.shedding);
        assert_eq!(check.witness, Some(vec![g("b"), g("c")]));
        let empty = SimplicialComplex::empty();
        assert!(check_certificate(&empty, &DecompositionCertificate::Leaf).valid);
        let void = check_certificate(&SimplicialComplex::void(), &DecompositionCertificate::Leaf);
        assert!(void.valid && void.void_leaf);
    }

    #[test]
    fn path_middle_vertex_is_not_shedding() {
        let c = complex(&[&["a", "b"], &["b", "c"]]);
        let check = is_shedding_vertex(&c, &g("b")).unwrap();
        assert!(!check.shedding);
        assert_eq!(check.witness, Some(vec![g("a")]));
        assert!(is_shedding_vertex(&c, &g("a")).unwrap().shedding);
        assert!(is_shedding_vertex(&c, &g("z")).is_err());
    }

    #[test]
    fn uniform_augmented_complex_root_is_bottom_flat() {
        let u = uniform(2, 3);
        let delta = augmented_bergman(&u).unwrap();
        let bottom = VertexLabel::flat(Vec::<String>::new());
        assert!(is_shedding_vertex(&delta, &bottom).unwrap().shedding);
        let cert = matroid_vd_certificate(&u, &u.proper_flats(), DEFAULT_VD_BUDGET).unwrap();
        assert_eq!(cert.root_vertex(), Some(&bottom));
        assert!(check_certificate(&delta, &cert).valid);
        assert_eq!(cert.leaf_count(), delta.facet_count());
        let order = shelling_from_certificate(&delta, &cert).unwrap();
        assert_eq!(order.len(), delta.facet_count());
        let VdOutcome::Decomposable(found) =
            is_vertex_decomposable(&delta, DEFAULT_VD_BUDGET).unwrap()
        else {
            panic!("matroid complexes decompose")
        };
        assert!(check_certificate(&delta, &found).valid);
    }

    #[test]
    fn empty_family_certifies_independence_complex() {
        let u = uniform(3, 4);
        let cert = matroid_vd_certificate(&u, &[], DEFAULT_VD_BUDGET).unwrap();
        assert!(check_certificate(&independence_complex(&u).unwrap(), &cert).valid);
        assert_eq!(
            augmented_upperset(&u, &[]).unwrap(),
            independence_complex(&u).unwrap()
        );
    }

    #[test]
    fn swapped_children_fail() {
        let c = complex(&[&["a", "b"], &["b", "c"], &["c", "d"]]);
        let VdOutcome::Decomposable(cert) = is_vertex_decomposable(&c, 100).unwrap() else {
            panic!("paths decompose")
        };
        assert!(check_certificate(&c, &cert).valid);
        let DecompositionCertificate::Node {
            vertex,
            deletion,
            link,
        } = cert
        else {
            panic!()
        };
        let swapped = DecompositionCertificate::node(vertex, *link, *deletion);
        let check = check_certificate(&c, &swapped);
        assert!(!check.valid);
        assert_eq!(check.failure.unwrap().path, vec!["del".to_string()]);
    }

    #[test]
    fn example_independence_complex_is_not_decomposable() {
        let f = crate::closure::tests::example();
        assert_eq!(
            is_vertex_decomposable(&independence_complex(&f).unwrap(), DEFAULT_VD_BUDGET).unwrap(),
            VdOutcome::NotDecomposable
        );
    }

    #[test]
    fn certificate_json_shape() {
        let cert = DecompositionCertificate::node(
            g("a"),
            DecompositionCertificate::Leaf,
            DecompositionCertificate::Leaf,
        );
        let text = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            text,
            r#"{"vertex":"y:a","del":{"leaf":true},"link":{"leaf":true}}"#
        );
        let back: DecompositionCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        assert!(serde_json::from_str::<DecompositionCertificate>(r#"{"leaf":false}"#).is_err());
    }

    #[test]
    fn join_certificate_verifies() {
        let left = complex(&[&["a", "b"], &["b", "c"]]);
        let right = complex(&[&["p"], &["q"]]);
        let VdOutcome::Decomposable(l) = is_vertex_decomposable(&left, 100).unwrap() else {
            panic!()
        };
        let VdOutcome::Decomposable(r) = is_vertex_decomposable(&right, 100).unwrap() else {
            panic!()
        };
        let joined = left.join(&right).unwrap();
        assert!(check_certificate(&joined, &join_certificates(&l, &r)).valid);
    }

    #[test]
    fn upper_sets_of_small_uniform() {
        // proper flats of U_{2,3}: the empty set and three points
        let sets = upper_sets(&uniform(2, 3));
        assert_eq!(sets.len(), 9);
        for s in &sets {
            check_upper_set(&uniform(2, 3), s).unwrap();
        }
    }

    #[test]
    fn shedding_step_witness_omits_the_flat() {
        let u = uniform(3, 4);
        let delta = augmented_bergman(&u).unwrap();
        let bottom = u.bottom();
        for face in crate::bergman::augmented_facets(&u).unwrap() {
            if face.flag.first() != Some(bottom) {
                continue;
            }
            let witness = shedding_step_witness(&u, &face).unwrap();
            let labels = witness.labels(&u);
            assert!(delta.contains_face(&labels));
            let mut rest = face.labels(&u);
            rest.retain(|l| *l != crate::bergman::flat_label(&u, bottom));
            assert!(rest.iter().all(|l| labels.contains(l)));
        }
    }

    #[test]
    fn non_matroid_is_rejected() {
        let f = crate::closure::tests::example();
        assert!(matroid_vd_certificate(&f, &[], 10).is_err());
    }
}
