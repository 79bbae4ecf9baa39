//! Abstract simplicial complexes on labeled vertices.
//!
//! A complex is stored by its facets. Vertices live in a sorted label table
//! owned by the complex and faces are bitsets of indices into that table, so
//! every operation that needs labels converts only at the boundary.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of a complex: either a ground-set element `y:<e>` or a flat
/// `x:{a,b,...}`.
///
/// The derived order puts every ground label before every flat label and is
/// lexicographic on the payload within each kind.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Ground(String),
    /// Sorted, duplicate-free element names.
    Flat(Vec<String>),
}

pub(crate) fn is_valid_element_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c == ',' || c == '{' || c == '}' || c.is_whitespace() || c.is_control())
}

impl VertexLabel {
    pub fn ground(name: impl Into<String>) -> Self {
        VertexLabel::Ground(name.into())
    }

    /// Builds a flat label, sorting and deduplicating the elements.
    pub fn flat<I, S>(elements: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        elements.sort();
        elements.dedup();
        VertexLabel::Flat(elements)
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, VertexLabel::Ground(_))
    }

    pub fn is_flat(&self) -> bool {
        matches!(self, VertexLabel::Flat(_))
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            VertexLabel::Ground(name) => is_valid_element_name(name),
            VertexLabel::Flat(elements) => {
                elements.iter().all(|e| is_valid_element_name(e))
                    && elements.windows(2).all(|w| w[0] < w[1])
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedLabel(format!("{self:?}")))
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Ground(name) => write!(f, "y:{name}"),
            VertexLabel::Flat(elements) => write!(f, "x:{{{}}}", elements.join(",")),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedLabel(s.to_string());
        let label = if let Some(name) = s.strip_prefix("y:") {
            VertexLabel::Ground(name.to_string())
        } else if let Some(body) = s.strip_prefix("x:") {
            let inner = body
                .strip_prefix('{')
                .and_then(|b| b.strip_suffix('}'))
                .ok_or_else(malformed)?;
            let elements = if inner.is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(str::to_string).collect()
            };
            VertexLabel::Flat(elements)
        } else {
            return Err(malformed());
        };
        label.validate().map_err(|_| malformed())?;
        Ok(label)
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renders a face as `{y:1,x:{1,2}}`.
pub fn format_face(face: &[VertexLabel]) -> String {
    let parts: Vec<String> = face.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// A set of vertex indices packed in a machine word pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(index: usize) -> Self {
        VertexSet(1u128 << index)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        index < Self::CAPACITY && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u128 << index;
    }

    pub fn with(self, index: usize) -> Self {
        VertexSet(self.0 | 1u128 << index)
    }

    pub fn without(self, index: usize) -> Self {
        VertexSet(self.0 & !(1u128 << index))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Indices in increasing order.
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

    /// Lexicographic comparison of the sorted index lists.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = VertexSet::empty();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

/// Keeps the inclusion-maximal faces, deduplicated and sorted lexicographically.
pub(crate) fn canonical_facets(mut faces: Vec<VertexSet>) -> Vec<VertexSet> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.0.cmp(&b.0)));
    faces.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(faces.len());
    for face in faces {
        if !kept.iter().any(|k| face.is_subset(*k)) {
            kept.push(face);
        }
    }
    kept.sort_unstable_by(|a, b| a.lex_cmp(*b));
    kept
}

pub(crate) fn deletion_facets(facets: &[VertexSet], face: VertexSet) -> Vec<VertexSet> {
    canonical_facets(facets.iter().map(|f| f.difference(face)).collect())
}

pub(crate) fn link_facets(facets: &[VertexSet], face: VertexSet) -> Vec<VertexSet> {
    canonical_facets(
        facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect(),
    )
}

/// Faces grouped by cardinality: `levels[k]` holds the faces with `k` vertices.
pub(crate) fn faces_by_size(facets: &[VertexSet]) -> Vec<HashSet<VertexSet>> {
    let Some(max) = facets.iter().map(|f| f.len()).max() else {
        return Vec::new();
    };
    let mut levels: Vec<HashSet<VertexSet>> = vec![HashSet::new(); max + 1];
    for f in facets {
        levels[f.len()].insert(*f);
    }
    for size in (1..=max).rev() {
        let (lower, upper) = levels.split_at_mut(size);
        for face in &upper[0] {
            for v in face.iter() {
                lower[size - 1].insert(face.without(v));
            }
        }
    }
    levels
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Transforms an f-vector `(f_{-1}, ..., f_{d-1})` into the h-vector with
/// `d = dim + 1`. Nonpure complexes use the same transform.
pub fn h_vector_from_f(f_vector: &[u64]) -> Vec<i64> {
    if f_vector.is_empty() {
        return Vec::new();
    }
    let d = f_vector.len() as i64 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f_vector[i as usize] as i64
                })
                .sum()
        })
        .collect()
}

/// Dimension, purity and face statistics of a nonvoid complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexStats {
    pub dimension: i64,
    pub pure: bool,
    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
}

/// A finite abstract simplicial complex in canonical facet form.
///
/// The void complex has no facets; the empty complex `{∅}` has the single
/// empty facet. Facets are inclusion-maximal and sorted lexicographically on
/// their sorted label lists, so structural equality is complex equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: vec![VertexSet::empty()],
        }
    }

    /// The complex generated by `faces`. Dominated faces are absorbed.
    pub fn from_facets<I, F>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexLabel>,
    {
        let faces: Vec<Vec<VertexLabel>> =
            faces.into_iter().map(|f| f.into_iter().collect()).collect();
        let mut table: Vec<VertexLabel> = faces.iter().flatten().cloned().collect();
        table.sort();
        table.dedup();
        for label in &table {
            label.validate()?;
        }
        if table.len() > VertexSet::CAPACITY {
            return Err(Error::TooManyVertices {
                count: table.len(),
                max: VertexSet::CAPACITY,
            });
        }
        let sets = faces
            .iter()
            .map(|face| {
                face.iter()
                    .map(|l| table.binary_search(l).expect("label in table"))
                    .collect()
            })
            .collect();
        Ok(Self::from_indexed(&table, sets))
    }

    /// The full simplex on `labels`.
    pub fn simplex<I: IntoIterator<Item = VertexLabel>>(labels: I) -> Result<Self> {
        Self::from_facets([labels])
    }

    /// Builds a complex from index faces over a sorted, duplicate-free table,
    /// dropping table entries that occur in no facet.
    pub(crate) fn from_indexed(table: &[VertexLabel], faces: Vec<VertexSet>) -> Self {
        debug_assert!(table.windows(2).all(|w| w[0] < w[1]));
        let facets = canonical_facets(faces);
        let used = facets
            .iter()
            .fold(VertexSet::empty(), |acc, f| acc.union(*f));
        if used.len() == table.len() {
            return SimplicialComplex {
                vertices: table.to_vec(),
                facets,
            };
        }
        let mut remap = vec![usize::MAX; table.len()];
        let mut vertices = Vec::with_capacity(used.len());
        for i in used.iter() {
            remap[i] = vertices.len();
            vertices.push(table[i].clone());
        }
        // remap is monotone, so the lexicographic facet order survives
        let facets = facets
            .into_iter()
            .map(|f| f.iter().map(|i| remap[i]).collect())
            .collect();
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn facets(&self) -> Vec<Vec<VertexLabel>> {
        self.facets.iter().map(|f| self.labels_of(*f)).collect()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub(crate) fn facet_sets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub(crate) fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(label).ok()
    }

    pub(crate) fn labels_of(&self, set: VertexSet) -> Vec<VertexLabel> {
        set.iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub(crate) fn set_of(&self, labels: &[VertexLabel]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownVertex(l.to_string()))
            })
            .collect()
    }

    fn face_set(&self, face: &[VertexLabel]) -> Result<VertexSet> {
        let set = self
            .set_of(face)
            .map_err(|_| Error::NotAFace(format_face(face)))?;
        if self.contains_set(set) {
            Ok(set)
        } else {
            Err(Error::NotAFace(format_face(face)))
        }
    }

    pub(crate) fn contains_set(&self, set: VertexSet) -> bool {
        self.facets.iter().any(|f| set.is_subset(*f))
    }

    pub fn contains_face(&self, face: &[VertexLabel]) -> bool {
        self.face_set(face).is_ok()
    }

    pub fn is_facet(&self, face: &[VertexLabel]) -> bool {
        match self.set_of(face) {
            Ok(set) => self.facets.contains(&set),
            Err(_) => false,
        }
    }

    /// `{τ ∖ σ : τ ∈ Δ}`.
    pub fn deletion(&self, face: &[VertexLabel]) -> Result<Self> {
        let set = self.face_set(face)?;
        Ok(Self::from_indexed(
            &self.vertices,
            deletion_facets(&self.facets, set),
        ))
    }

    /// `{τ ∖ σ : σ ⊆ τ ∈ Δ}`.
    pub fn link(&self, face: &[VertexLabel]) -> Result<Self> {
        let set = self.face_set(face)?;
        Ok(Self::from_indexed(
            &self.vertices,
            link_facets(&self.facets, set),
        ))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(shared) = self.vertices.iter().find(|l| other.index_of(l).is_some()) {
            return Err(Error::OverlappingJoin(shared.to_string()));
        }
        let mut table: Vec<VertexLabel> = self
            .vertices
            .iter()
            .chain(other.vertices.iter())
            .cloned()
            .collect();
        table.sort();
        if table.len() > VertexSet::CAPACITY {
            return Err(Error::TooManyVertices {
                count: table.len(),
                max: VertexSet::CAPACITY,
            });
        }
        let translate = |c: &Self, f: VertexSet| -> VertexSet {
            f.iter()
                .map(|i| table.binary_search(&c.vertices[i]).expect("merged"))
                .collect()
        };
        let left: Vec<VertexSet> = self.facets.iter().map(|f| translate(self, *f)).collect();
        let right: Vec<VertexSet> = other.facets.iter().map(|f| translate(other, *f)).collect();
        let faces = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| a.union(*b)))
            .collect();
        Ok(Self::from_indexed(&table, faces))
    }

    /// Faces of the complex contained in `labels`.
    pub fn induced(&self, labels: &[VertexLabel]) -> Result<Self> {
        let set = self.set_of(labels)?;
        Ok(Self::from_indexed(
            &self.vertices,
            self.facets.iter().map(|f| f.intersection(set)).collect(),
        ))
    }

    /// Renames vertices; labels missing from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<VertexLabel, VertexLabel>) -> Result<Self> {
        let rename = |l: &VertexLabel| map.get(l).unwrap_or(l).clone();
        let mut renamed: Vec<VertexLabel> = self.vertices.iter().map(rename).collect();
        renamed.sort();
        renamed.dedup();
        if renamed.len() != self.vertices.len() {
            return Err(Error::InvalidArgument(
                "relabeling identifies two vertices".into(),
            ));
        }
        Self::from_facets(self.facets.iter().map(|f| {
            f.iter()
                .map(|i| rename(&self.vertices[i]))
                .collect::<Vec<_>>()
        }))
    }

    pub fn dimension(&self) -> Result<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .ok_or(Error::VoidComplex)
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(faces_by_size(&self.facets)
            .iter()
            .map(|level| level.len() as u64)
            .collect())
    }

    pub fn h_vector(&self) -> Result<Vec<i64>> {
        Ok(h_vector_from_f(&self.f_vector()?))
    }

    pub fn stats(&self) -> Result<ComplexStats> {
        let f_vector = self.f_vector()?;
        Ok(ComplexStats {
            dimension: self.dimension()?,
            pure: self.is_pure(),
            h_vector: h_vector_from_f(&f_vector),
            f_vector,
        })
    }

    /// Every face, sorted by size and then lexicographically.
    pub fn all_faces(&self) -> Vec<Vec<VertexLabel>> {
        let mut sets: Vec<VertexSet> = faces_by_size(&self.facets).into_iter().flatten().collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        sets.into_iter().map(|s| self.labels_of(s)).collect()
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            facets: self.facets(),
            vertices: self.vertices.clone(),
        }
    }

    pub fn from_document(doc: &ComplexDocument) -> Result<Self> {
        let complex = Self::from_facets(doc.facets.iter().cloned())?;
        let mut listed = doc.vertices.clone();
        listed.sort();
        listed.dedup();
        if listed != complex.vertices {
            return Err(Error::InvalidArgument(
                "vertex list does not match the facets".into(),
            ));
        }
        Ok(complex)
    }

    pub fn to_json(&self) -> String {
        crate::report::to_canonical_json(&self.to_document())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ComplexDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }
}

/// Serialized form `{"facets":[[label…]…],"vertices":[label…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub facets: Vec<Vec<VertexLabel>>,
    pub vertices: Vec<VertexLabel>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> VertexLabel {
        VertexLabel::ground(name)
    }

    fn complex(faces: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.iter().map(|n| g(n)))).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        complex(&[&["1", "2"], &["1", "3"], &["2", "3"]])
    }

    #[test]
    fn label_order_and_text() {
        assert!(g("9") < VertexLabel::flat(Vec::<String>::new()));
        assert!(VertexLabel::flat(["1"]) < VertexLabel::flat(["1", "2"]));
        assert!(VertexLabel::flat(["1", "2"]) < VertexLabel::flat(["2"]));
        for text in ["y:a", "x:{}", "x:{1,2,3}"] {
            let label: VertexLabel = text.parse().unwrap();
            assert_eq!(label.to_string(), text);
        }
        for bad in ["z:1", "y:", "x:{2,1}", "x:{1,1}", "x:1,2", "y:a b"] {
            assert!(bad.parse::<VertexLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn absorbs_dominated_faces() {
        let c = complex(&[&["1", "2"], &["2", "3"], &["1"]]);
        assert_eq!(c.facets(), vec![vec![g("1"), g("2")], vec![g("2"), g("3")]]);
    }

    #[test]
    fn void_and_empty_differ() {
        let void = SimplicialComplex::from_facets(Vec::<Vec<VertexLabel>>::new()).unwrap();
        assert!(void.is_void());
        assert_eq!(void, SimplicialComplex::void());
        assert_ne!(void, SimplicialComplex::empty());
        assert_eq!(void.dimension(), Err(Error::VoidComplex));
        assert_eq!(SimplicialComplex::empty().dimension(), Ok(-1));
        assert_eq!(
            SimplicialComplex::empty().stats().unwrap().h_vector,
            vec![1]
        );
    }

    #[test]
    fn malformed_label_rejected() {
        let bad = VertexLabel::Flat(vec!["2".into(), "1".into()]);
        assert!(matches!(
            SimplicialComplex::from_facets([vec![bad]]),
            Err(Error::MalformedLabel(_))
        ));
    }

    #[test]
    fn deletion_examples() {
        let simplex = complex(&[&["1", "2", "3"]]);
        assert_eq!(
            simplex.deletion(&[g("1")]).unwrap(),
            complex(&[&["2", "3"]])
        );
        assert_eq!(
            triangle_boundary().deletion(&[g("1")]).unwrap(),
            complex(&[&["2", "3"]])
        );
        assert!(matches!(
            triangle_boundary().deletion(&[g("1"), g("2"), g("3")]),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn link_examples() {
        let simplex = complex(&[&["1", "2", "3"]]);
        assert_eq!(simplex.link(&[g("1")]).unwrap(), complex(&[&["2", "3"]]));
        assert_eq!(
            triangle_boundary().link(&[g("1")]).unwrap(),
            complex(&[&["2"], &["3"]])
        );
        assert_eq!(
            simplex.link(&[g("1"), g("2"), g("3")]).unwrap(),
            SimplicialComplex::empty()
        );
        assert!(triangle_boundary().link(&[g("9")]).is_err());
    }

    #[test]
    fn join_examples() {
        let t = triangle_boundary();
        assert_eq!(t.join(&SimplicialComplex::empty()).unwrap(), t);
        assert_eq!(
            complex(&[&["a"]]).join(&complex(&[&["b"]])).unwrap(),
            complex(&[&["a", "b"]])
        );
        assert!(matches!(
            t.join(&complex(&[&["1"]])),
            Err(Error::OverlappingJoin(_))
        ));
        assert!(t.join(&SimplicialComplex::void()).unwrap().is_void());
    }

    #[test]
    fn induced_examples() {
        let t = triangle_boundary();
        assert_eq!(t.induced(&[]).unwrap(), SimplicialComplex::empty());
        assert_eq!(
            t.induced(&[g("1"), g("2")]).unwrap(),
            complex(&[&["1", "2"]])
        );
        assert!(matches!(t.induced(&[g("7")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn stats_examples() {
        let edge = complex(&[&["1", "2"]]);
        let s = edge.stats().unwrap();
        assert_eq!((s.dimension, s.pure), (1, true));
        assert_eq!(s.f_vector, vec![1, 2, 1]);
        assert_eq!(s.h_vector, vec![1, 0, 0]);

        let s = triangle_boundary().stats().unwrap();
        assert_eq!((s.dimension, s.pure), (1, true));
        assert_eq!(s.f_vector, vec![1, 3, 3]);
        // h_0 = 1, h_1 = 3 - 2 = 1, h_2 = 1 - 3 + 3 = 1
        assert_eq!(s.h_vector, vec![1, 1, 1]);

        assert!(!complex(&[&["1", "2"], &["3"]]).is_pure());
    }

    #[test]
    fn json_is_canonical() {
        let c = SimplicialComplex::from_facets([
            vec![VertexLabel::flat(["1", "2"]), g("1")],
            vec![VertexLabel::flat(Vec::<String>::new())],
        ])
        .unwrap();
        let text = c.to_json();
        assert_eq!(
            serde_json::to_string(&serde_json::from_str::<serde_json::Value>(&text).unwrap())
                .unwrap(),
            r#"{"facets":[["y:1","x:{1,2}"],["x:{}"]],"vertices":["y:1","x:{}","x:{1,2}"]}"#
        );
        assert_eq!(SimplicialComplex::from_json(&text).unwrap(), c);
    }

    #[test]
    fn vertex_set_lex_order() {
        let a: VertexSet = [0, 2].into_iter().collect();
        let b: VertexSet = [0, 1, 5].into_iter().collect();
        assert_eq!(a.lex_cmp(b), Ordering::Greater);
        let c: VertexSet = [0].into_iter().collect();
        assert_eq!(c.lex_cmp(a), Ordering::Less);
    }
}
