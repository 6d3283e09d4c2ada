use super::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

impl SimplicialComplex {
    /// `lk_Δ T`: void when `T ∉ Δ`, `{∅}` when `T` is a facet.
    pub fn link(&self, t: &Face) -> SimplicialComplex {
        if !self.contains_face(t) {
            return SimplicialComplex::void();
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| t.is_subset(f))
            .map(|f| f.difference(t))
            .collect();
        SimplicialComplex::from_faces_in(&self.labels, faces)
    }

    /// The subcomplex of all faces contained in `w`.
    pub fn induced(&self, w: &[VertexId]) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let mut keep = vec![false; self.vertex_count()];
        for v in w {
            if let Some(slot) = keep.get_mut(v.index()) {
                *slot = true;
            }
        }
        let faces = self
            .facets
            .iter()
            .map(|f| f.vertices().iter().copied().filter(|v| keep[v.index()]).collect())
            .map(Face::from_sorted)
            .collect();
        SimplicialComplex::from_faces_in(&self.labels, faces)
    }

    /// `ast_Δ U`, the induced complex on `V − U`. Removing every vertex gives `{∅}`.
    pub fn antistar(&self, u: &[VertexId]) -> SimplicialComplex {
        let mut drop = vec![false; self.vertex_count()];
        for v in u {
            if let Some(slot) = drop.get_mut(v.index()) {
                *slot = true;
            }
        }
        let rest: Vec<VertexId> = self.vertices().filter(|v| !drop[v.index()]).collect();
        self.induced(&rest)
    }

    /// Faces of dimension at most `k`, for `-1 ≤ k ≤ dim Δ`.
    pub fn skeleton(&self, k: isize) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::domain("skeleton of the void complex"));
        }
        if k < -1 || k > self.dim() {
            return Err(Error::domain(format!(
                "skeleton index {k} outside -1..={}",
                self.dim()
            )));
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(f.clone());
            } else {
                faces.extend(f.subsets_of_size(size));
            }
        }
        Ok(SimplicialComplex::from_faces_in(&self.labels, faces))
    }

    /// Vertices lying outside at least one facet, i.e. not cone points.
    pub fn core_vertices(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.facets.iter().any(|f| !f.contains(v)))
            .collect()
    }

    pub fn core(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::domain("core of the void complex"));
        }
        Ok(self.induced(&self.core_vertices()))
    }

    fn check_member_faces(&self, a: &[Face]) -> Result<()> {
        for f in a {
            if f.is_empty() {
                return Err(Error::domain("face sets must not contain the empty face"));
            }
            if !self.contains_face(f) {
                return Err(Error::domain(format!(
                    "face {:?} is not in the complex",
                    f.vertices().iter().map(|v| v.0).collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    /// No two distinct members of `a` span a face together.
    pub fn is_independent_faceset(&self, a: &[Face]) -> Result<bool> {
        self.check_member_faces(a)?;
        Ok(independent_unchecked(self, a))
    }

    /// Independent, and every facet contains some member of `a`.
    pub fn is_excellent_faceset(&self, a: &[Face]) -> Result<bool> {
        if !self.is_independent_faceset(a)? {
            return Ok(false);
        }
        Ok(self
            .facets
            .iter()
            .all(|facet| a.iter().any(|s| s.is_subset(facet))))
    }

    pub fn is_independent_set(&self, j: &[VertexId]) -> Result<bool> {
        self.is_independent_faceset(&singletons(j))
    }

    pub fn is_excellent_set(&self, j: &[VertexId]) -> Result<bool> {
        self.is_excellent_faceset(&singletons(j))
    }

    /// `Δ_A`: every face containing a member of the independent set `a` is removed.
    pub fn remove_independent_faces(&self, a: &[Face]) -> Result<SimplicialComplex> {
        if !self.is_independent_faceset(a)? {
            return Err(Error::domain("face set is not independent"));
        }
        let faces = self
            .faces()
            .iter()
            .filter(|g| !a.iter().any(|t| t.is_subset(g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex::from_faces_in(&self.labels, faces))
    }
}

pub(crate) fn independent_unchecked(c: &SimplicialComplex, a: &[Face]) -> bool {
    for (i, s) in a.iter().enumerate() {
        for t in &a[i + 1..] {
            if s == t {
                continue;
            }
            if c.contains_face(&s.union(t)) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn singletons(j: &[VertexId]) -> Vec<Face> {
    j.iter().map(|&v| Face::from_sorted(vec![v])).collect()
}
