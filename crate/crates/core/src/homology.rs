//! Reduced simplicial homology and a link-based depth/dimension oracle for
//! Stanley–Reisner rings.
//!
//! This path never touches Čech strands: depth comes from the reduced
//! homology of links, which makes it an independent check on
//! [`crate::cech`].

use serde::{Deserialize, Serialize};

use crate::combinatorics::{minimalize, SquarefreeIdeal, VarSet};
use crate::error::Result;
use crate::linalg::{rank, FieldSpec, SignMatrix};

/// A simplicial complex given by its facets.
///
/// No facets is the void complex; the single empty facet is the
/// irrelevant complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertices: VarSet,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn new(vertices: VarSet, facets: impl IntoIterator<Item = VarSet>) -> Self {
        let facets: Vec<VarSet> = facets.into_iter().collect();
        assert!(facets.iter().all(|f| f.is_subset(vertices)), "facet outside the vertex set");
        SimplicialComplex { vertices, facets: maximalize(facets) }
    }

    /// The Stanley–Reisner complex of `ideal`.
    pub fn from_ideal(ideal: &SquarefreeIdeal) -> Result<Self> {
        Ok(SimplicialComplex::new(ideal.ring().all(), ideal.complex_facets()?))
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Every face, sorted by size and then bitset.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut all: Vec<VarSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_by_key(|f| (f.len(), f.0));
        all.dedup();
        all
    }

    /// `lk F = { G \ F : F ⊆ G facet }`, reduced to its maximal members.
    pub fn link(&self, face: VarSet) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|g| face.is_subset(**g)).map(|g| *g - face);
        SimplicialComplex::new(self.vertices - face, facets)
    }

    /// Reduced homology dimensions in degrees `-1..=dim`; index `k` holds
    /// degree `k - 1`. Empty for the void complex.
    pub fn reduced_homology_dims(&self, field: FieldSpec) -> Vec<usize> {
        let Some(top) = self.dim() else {
            return Vec::new();
        };
        let faces = self.faces();
        let by_size: Vec<Vec<VarSet>> =
            (0..=(top + 1) as usize).map(|k| faces.iter().filter(|f| f.len() == k).copied().collect()).collect();
        // boundary ranks: ranks[k] = rank of the map from size-k faces to size-(k-1) faces
        let mut ranks = vec![0usize; by_size.len() + 1];
        for k in 1..by_size.len() {
            ranks[k] = rank(&boundary(&by_size[k], &by_size[k - 1]), field);
        }
        (0..by_size.len()).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    /// Alternating face count `-1 + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces().iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }
}

fn maximalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| std::cmp::Reverse((s.len(), s.0)));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|g| s.is_subset(*g)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Simplicial boundary from faces of size `k` to faces of size `k-1`.
fn boundary(faces: &[VarSet], targets: &[VarSet]) -> SignMatrix {
    let mut d = SignMatrix::zeros(targets.len(), faces.len());
    for (col, face) in faces.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let target = *face - VarSet::singleton(v);
            let row = targets.binary_search_by_key(&target.0, |t| t.0).expect("faces are closed under removal");
            d.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    d
}

/// Reduced homology of `cx` over `field`.
pub fn reduced_homology_dims(cx: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    cx.reduced_homology_dims(field)
}

/// Depth and dimension of `S/I` from reduced homology of links.
///
/// `H^i_m(S/I) != 0` iff some face `F` has `H~_{i-|F|-1}(lk F) != 0`, so the
/// depth is the least such `i`; the dimension is the largest facet size.
pub fn depth_dim_oracle(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<(usize, usize)> {
    let cx = SimplicialComplex::from_ideal(ideal)?;
    let dim = cx.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    let mut depth = dim;
    for face in cx.faces() {
        // link homology in degree j gives i = j + |F| + 1 >= |F|
        if face.len() >= depth {
            continue;
        }
        let h = cx.link(face).reduced_homology_dims(field);
        if let Some(k) = h.iter().position(|&d| d > 0) {
            // index k is degree k-1, so i = k + |F|
            depth = depth.min(k + face.len());
        }
    }
    Ok((depth, dim))
}

/// Sorted, inclusion-minimal complements of the facets; used to compare a
/// complex against the minimal primes of its ideal.
pub fn facet_complements(cx: &SimplicialComplex) -> Vec<VarSet> {
    minimalize(cx.facets().iter().map(|f| cx.vertices() - *f).collect())
}
