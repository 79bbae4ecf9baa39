//! Brute-force oracles and the shared instance corpus for integration tests.
//!
//! Oracles work on plain bitmasks and label strings so that they share no
//! code with the library beyond reading an operator's flat family.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use augbergman::closure::ClosureOperator;
use augbergman::complex::SimplicialComplex;
use augbergman::instances;

pub type Face = BTreeSet<String>;

/// An operator as a bare flat family over `0..n`.
#[derive(Clone, Debug)]
pub struct Family {
    pub names: Vec<String>,
    pub flats: Vec<u64>,
}

impl Family {
    pub fn of(f: &ClosureOperator) -> Self {
        Family {
            names: f.ground_set().to_vec(),
            flats: f.flats().iter().map(|s| s.bits()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n()) - 1
    }

    pub fn closure(&self, set: u64) -> u64 {
        self.flats
            .iter()
            .filter(|g| set & !**g == 0)
            .fold(self.full(), |acc, g| acc & g)
    }

    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|i| self.closure(set & !(1 << i)) & (1 << i) == 0)
    }

    pub fn independent_sets(&self) -> Vec<u64> {
        (0..1u64 << self.n())
            .filter(|s| self.is_independent(*s))
            .collect()
    }

    pub fn proper_flats(&self) -> Vec<u64> {
        self.flats
            .iter()
            .copied()
            .filter(|g| *g != self.full())
            .collect()
    }

    pub fn names_of(&self, set: u64) -> Vec<String> {
        bits(set).map(|i| self.names[i].clone()).collect()
    }

    pub fn y(&self, i: usize) -> String {
        format!("y:{}", self.names[i])
    }

    pub fn x(&self, set: u64) -> String {
        format!("x:{{{}}}", self.names_of(set).join(","))
    }

    /// Every chain of proper flats, including the empty chain.
    pub fn chains(&self) -> Vec<Vec<u64>> {
        let mut proper = self.proper_flats();
        proper.sort_by_key(|s| s.count_ones());
        let mut out = vec![Vec::new()];
        let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
        while let Some(chain) = stack.pop() {
            for g in &proper {
                let extends = match chain.last() {
                    None => true,
                    Some(top) => *g != *top && top & !g == 0,
                };
                if extends {
                    let mut next = chain.clone();
                    next.push(*g);
                    out.push(next.clone());
                    stack.push(next);
                }
            }
        }
        out
    }

    /// All faces `(I, F_•)` with `f(I) ⊆ F_1`, as label sets.
    pub fn augmented_faces(&self) -> BTreeSet<Face> {
        let chains = self.chains();
        let mut faces = BTreeSet::new();
        for i in self.independent_sets() {
            let closed = self.closure(i);
            for chain in &chains {
                if let Some(first) = chain.first() {
                    if closed & !first != 0 {
                        continue;
                    }
                }
                let mut face: Face = bits(i).map(|e| self.y(e)).collect();
                face.extend(chain.iter().map(|g| self.x(*g)));
                faces.insert(face);
            }
        }
        faces
    }

    /// Faces of the order complex on flats strictly between `f(∅)` and `E`.
    pub fn bergman_faces(&self) -> BTreeSet<Face> {
        let bottom = self.closure(0);
        self.chains()
            .into_iter()
            .filter(|c| c.iter().all(|g| *g != bottom))
            .map(|c| c.iter().map(|g| self.x(*g)).collect())
            .collect()
    }
}

pub fn bits(set: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| set >> i & 1 == 1)
}

pub fn maximal(faces: &BTreeSet<Face>) -> BTreeSet<Face> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .cloned()
        .collect()
}

pub fn facets_of(complex: &SimplicialComplex) -> BTreeSet<Face> {
    complex
        .facets()
        .iter()
        .map(|f| f.iter().map(ToString::to_string).collect())
        .collect()
}

/// Every face of a complex, from its facets.
pub fn faces_of(complex: &SimplicialComplex) -> BTreeSet<Face> {
    let mut out = BTreeSet::new();
    for facet in complex.facets() {
        let labels: Vec<String> = facet.iter().map(ToString::to_string).collect();
        for mask in 0..1u64 << labels.len() {
            out.insert(bits(mask).map(|i| labels[i].clone()).collect());
        }
    }
    out
}

pub fn link_faces(faces: &BTreeSet<Face>, sigma: &Face) -> BTreeSet<Face> {
    faces
        .iter()
        .filter(|t| sigma.is_subset(t))
        .map(|t| t.difference(sigma).cloned().collect())
        .collect()
}

pub fn f_vector(faces: &BTreeSet<Face>) -> Vec<u64> {
    let top = faces.iter().map(BTreeSet::len).max().unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    for face in faces {
        f[face.len()] += 1;
    }
    f
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h(t) = Σ_i f_{i-1} t^i (1-t)^{d-i}`, expanded.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() as i64 - 1;
    let mut h = vec![0i64; f.len()];
    for (i, fi) in f.iter().enumerate() {
        let i = i as i64;
        for j in 0..=(d - i) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            h[(i + j) as usize] += *fi as i64 * sign * binomial(d - i, j);
        }
    }
    h
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn uniform_matroids(max_n: usize) -> Vec<ClosureOperator> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            out.push(instances::uniform(r, n).unwrap());
        }
    }
    out
}

/// Matroids that are not uniform.
pub fn other_matroids() -> Vec<ClosureOperator> {
    let from = |ground: &[&str], bases: &[&[&str]]| {
        ClosureOperator::matroid_from_bases(
            ground,
            &bases.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    };
    vec![
        // a parallel pair and a coloop
        from(&["1", "2", "3"], &[&["1", "3"], &["2", "3"]]),
        // a loop
        from(&["1", "2", "3"], &[&["1", "2"]]),
        // two parallel classes of size two
        from(
            &["1", "2", "3", "4"],
            &[&["1", "3"], &["1", "4"], &["2", "3"], &["2", "4"]],
        ),
        // rank 3 on 5 elements with a three-point line
        from(
            &["1", "2", "3", "4", "5"],
            &[
                &["1", "2", "4"],
                &["1", "2", "5"],
                &["1", "3", "4"],
                &["1", "3", "5"],
                &["2", "3", "4"],
                &["2", "3", "5"],
                &["1", "4", "5"],
                &["2", "4", "5"],
                &["3", "4", "5"],
            ],
        ),
        // a triangle plus a coloop
        from(
            &["1", "2", "3", "4"],
            &[&["1", "2", "4"], &["1", "3", "4"], &["2", "3", "4"]],
        ),
    ]
}

pub fn matroids(max_n: usize) -> Vec<ClosureOperator> {
    let mut out = uniform_matroids(max_n);
    out.extend(other_matroids().into_iter().filter(|m| m.len() <= max_n));
    out
}

/// Named instances, small matroids and seeded random operators.
pub fn corpus(max_n: usize, random: usize) -> Vec<ClosureOperator> {
    let mut out = vec![instances::worked_example(), instances::two_wedge()];
    out.extend(matroids(max_n.min(4)));
    out.extend(instances::random_operators(random, max_n).unwrap());
    out.retain(|f| f.len() <= max_n);
    out
}

/// Calls `visit` once for every intersection-closed family of subsets of
/// an `n`-set that contains the ground set. Sets are decided largest first,
/// so a set is forced in exactly when it is the meet of two chosen sets.
pub fn for_each_closure_system(n: usize, mut visit: impl FnMut(&[u64])) {
    let full = (1u64 << n) - 1;
    let mut order: Vec<u64> = (0..full).collect();
    order.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let mut family = vec![full];
    descend(&order, &mut family, &mut visit);
}

fn descend(rest: &[u64], family: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    let Some((&set, rest)) = rest.split_first() else {
        visit(family);
        return;
    };
    let forced = family.iter().any(|a| family.iter().any(|b| a & b == set));
    family.push(set);
    descend(rest, family, visit);
    family.pop();
    if !forced {
        descend(rest, family, visit);
    }
}

/// Builds the operator whose flats are `family`.
pub fn operator_of(n: usize, family: &[u64]) -> ClosureOperator {
    let names = instances::element_names(n);
    let lists: Vec<Vec<String>> = family
        .iter()
        .map(|s| bits(*s).map(|i| names[i].clone()).collect())
        .collect();
    ClosureOperator::new(&names, &lists).unwrap()
}

/// Every closure operator on `n ≤ 4` labeled elements.
pub fn all_operators(n: usize) -> Vec<ClosureOperator> {
    assert!(n <= 4);
    let mut out = Vec::new();
    for_each_closure_system(n, |family| out.push(operator_of(n, family)));
    out
}

/// Positions of each label in a list of faces.
pub fn label_index(faces: &[Vec<String>]) -> BTreeMap<Vec<String>, usize> {
    faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect()
}
