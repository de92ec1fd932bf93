//! Generalised triangulations: a set of abstract tetrahedra whose triangular
//! faces are glued together in pairs by affine maps.
//!
//! Conventions fixed across the crate (and all file formats):
//! * face `i` of a tetrahedron is the face opposite vertex `i`;
//! * the six edges of a tetrahedron are numbered 0..6 in the order
//!   (01, 02, 03, 12, 13, 23);
//! * a gluing of face `f` of tetrahedron `t` onto tetrahedron `t2` is a
//!   permutation `p` of vertex labels with `p(f)` the matched face of `t2`.
//!
//! A triangulation is immutable once built: all operations that change the
//! gluing structure produce a new value.

mod format;
mod isosig;
mod skeleton;

pub use format::ParseError;
pub use isosig::IsoSignature;
pub use skeleton::{
    edge_walk, BoundaryComponent, EdgeClass, EdgeEmbedding, EdgeWalk, LinkKind, Skeleton,
    VertexClass,
};

use crate::perm::Perm4;

/// One side of a face gluing: the adjacent tetrahedron and the vertex
/// relabelling carrying this tetrahedron's labels to the neighbour's.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GluingError {
    #[error("face {face} of tetrahedron {tet} is already glued")]
    AlreadyGlued { tet: usize, face: u8 },
    #[error("permutation {perm} does not carry face {face} onto face {to_face}")]
    FaceMismatch { face: u8, to_face: u8, perm: Perm4 },
    #[error("face glued to itself via the identity")]
    IdentitySelfGluing,
    #[error("a face glued to itself requires an involution fixing that face")]
    BadSelfGluing,
    #[error("tetrahedron index {0} out of range")]
    BadIndex(usize),
}

/// A generalised triangulation: `n` tetrahedra plus a face gluing table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    glue: Vec<[Option<Gluing>; 4]>,
}

impl Triangulation {
    /// A triangulation of `n` tetrahedra with every face a boundary triangle.
    pub fn new(n: usize) -> Triangulation {
        Triangulation {
            glue: vec![[None; 4]; n],
        }
    }

    pub fn empty() -> Triangulation {
        Triangulation::new(0)
    }

    /// Number of tetrahedra.
    pub fn size(&self) -> usize {
        self.glue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glue.is_empty()
    }

    pub fn gluing(&self, tet: usize, face: u8) -> Option<Gluing> {
        self.glue[tet][face as usize]
    }

    pub fn is_boundary_face(&self, tet: usize, face: u8) -> bool {
        self.glue[tet][face as usize].is_none()
    }

    pub fn boundary_face_count(&self) -> usize {
        self.glue
            .iter()
            .map(|t| t.iter().filter(|g| g.is_none()).count())
            .sum()
    }

    /// Glues face `face` of `tet` onto tetrahedron `to` via `perm`.
    /// The matched face of `to` is `perm(face)`; the reverse gluing is
    /// installed automatically.
    pub fn join(
        &mut self,
        tet: usize,
        face: u8,
        to: usize,
        perm: Perm4,
    ) -> Result<(), GluingError> {
        if tet >= self.size() {
            return Err(GluingError::BadIndex(tet));
        }
        if to >= self.size() {
            return Err(GluingError::BadIndex(to));
        }
        let to_face = perm.apply(face);
        if tet == to && face == to_face {
            // A face identified with itself: only a non-trivial involution
            // fixing the face apex is representable (this arises from
            // degenerate crushing output, never from ordinary gluings).
            if perm.is_identity() {
                return Err(GluingError::IdentitySelfGluing);
            }
            if !perm.compose(perm).is_identity() {
                return Err(GluingError::BadSelfGluing);
            }
            if self.glue[tet][face as usize].is_some() {
                return Err(GluingError::AlreadyGlued { tet, face });
            }
            self.glue[tet][face as usize] = Some(Gluing { tet: to, perm });
            return Ok(());
        }
        if self.glue[tet][face as usize].is_some() {
            return Err(GluingError::AlreadyGlued { tet, face });
        }
        if self.glue[to][to_face as usize].is_some() {
            return Err(GluingError::AlreadyGlued {
                tet: to,
                face: to_face,
            });
        }
        self.glue[tet][face as usize] = Some(Gluing { tet: to, perm });
        self.glue[to][to_face as usize] = Some(Gluing {
            tet,
            perm: perm.inverse(),
        });
        Ok(())
    }

    /// Removes the gluing at `(tet, face)` and its partner, if any.
    pub fn unjoin(&mut self, tet: usize, face: u8) {
        if let Some(g) = self.glue[tet][face as usize].take() {
            let back = g.perm.apply(face);
            if !(g.tet == tet && back == face) {
                self.glue[g.tet][back as usize] = None;
            }
        }
    }

    /// Checks the involution invariant over the whole table.  Tables built
    /// exclusively through `join` satisfy it by construction; this guards
    /// hand-assembled input.
    pub fn validate_pairing(&self) -> Result<(), GluingError> {
        for t in 0..self.size() {
            for f in 0..4u8 {
                let Some(g) = self.glue[t][f as usize] else {
                    continue;
                };
                if g.tet >= self.size() {
                    return Err(GluingError::BadIndex(g.tet));
                }
                let to_face = g.perm.apply(f);
                if g.tet == t && to_face == f {
                    if g.perm.is_identity() {
                        return Err(GluingError::IdentitySelfGluing);
                    }
                    if !g.perm.compose(g.perm).is_identity() {
                        return Err(GluingError::BadSelfGluing);
                    }
                    continue;
                }
                let back = self.glue[g.tet][to_face as usize];
                if back != Some(Gluing { tet: t, perm: g.perm.inverse() }) {
                    return Err(GluingError::FaceMismatch {
                        face: f,
                        to_face,
                        perm: g.perm,
                    });
                }
            }
        }
        Ok(())
    }

    /// Connected components as sorted lists of tetrahedron indices.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(t) = stack.pop() {
                members.push(t);
                for f in 0..4u8 {
                    if let Some(g) = self.glue[t][f as usize] {
                        if comp[g.tet] == usize::MAX {
                            comp[g.tet] = id;
                            stack.push(g.tet);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    /// Splits into connected components, each relabelled with consecutive
    /// indices in the order of `component_indices`.
    pub fn components(&self) -> Vec<Triangulation> {
        let comps = self.component_indices();
        comps
            .iter()
            .map(|members| {
                let mut local = std::collections::HashMap::new();
                for (i, &t) in members.iter().enumerate() {
                    local.insert(t, i);
                }
                let mut tri = Triangulation::new(members.len());
                for (i, &t) in members.iter().enumerate() {
                    for f in 0..4 {
                        tri.glue[i][f] = self.glue[t][f].map(|g| Gluing {
                            tet: local[&g.tet],
                            perm: g.perm,
                        });
                    }
                }
                tri
            })
            .collect()
    }

    /// Applies a relabelling: tetrahedron `t` becomes `tet_map[t]` and its
    /// vertices are renamed by `vertex_map[t]`.
    pub fn relabel(&self, tet_map: &[usize], vertex_map: &[Perm4]) -> Triangulation {
        let n = self.size();
        assert_eq!(tet_map.len(), n);
        assert_eq!(vertex_map.len(), n);
        let mut tri = Triangulation::new(n);
        for t in 0..n {
            for f in 0..4u8 {
                if let Some(g) = self.glue[t][f as usize] {
                    let nf = vertex_map[t].apply(f);
                    let np = vertex_map[g.tet].compose(g.perm).compose(vertex_map[t].inverse());
                    tri.glue[tet_map[t]][nf as usize] = Some(Gluing {
                        tet: tet_map[g.tet],
                        perm: np,
                    });
                }
            }
        }
        tri
    }

    /// The disjoint union of two triangulations, `other`'s tetrahedra
    /// renumbered after `self`'s.
    pub fn disjoint_union(&self, other: &Triangulation) -> Triangulation {
        let offset = self.size();
        let mut glue = self.glue.clone();
        for t in 0..other.size() {
            let mut row = [None; 4];
            for f in 0..4 {
                row[f] = other.glue[t][f].map(|g| Gluing {
                    tet: g.tet + offset,
                    perm: g.perm,
                });
            }
            glue.push(row);
        }
        Triangulation { glue }
    }
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_installs_involution() {
        let mut t = Triangulation::new(2);
        let p = Perm4::from_images([1, 0, 2, 3]);
        t.join(0, 2, 1, p).unwrap();
        assert_eq!(t.gluing(0, 2), Some(Gluing { tet: 1, perm: p }));
        assert_eq!(
            t.gluing(1, p.apply(2)),
            Some(Gluing {
                tet: 0,
                perm: p.inverse()
            })
        );
        t.validate_pairing().unwrap();
    }

    #[test]
    fn identity_self_gluing_rejected() {
        let mut t = Triangulation::new(1);
        assert_eq!(
            t.join(0, 0, 0, Perm4::IDENTITY),
            Err(GluingError::IdentitySelfGluing)
        );
    }

    #[test]
    fn double_gluing_rejected() {
        let mut t = Triangulation::new(3);
        t.join(0, 0, 1, Perm4::IDENTITY).unwrap();
        assert!(matches!(
            t.join(0, 0, 2, Perm4::IDENTITY),
            Err(GluingError::AlreadyGlued { .. })
        ));
    }

    #[test]
    fn unjoin_restores_boundary() {
        let mut t = Triangulation::new(2);
        t.join(0, 1, 1, Perm4::from_images([2, 1, 0, 3])).unwrap();
        t.unjoin(0, 1);
        assert_eq!(t.boundary_face_count(), 8);
        t.validate_pairing().unwrap();
    }

    #[test]
    fn components_split_and_relabel() {
        let mut t = Triangulation::new(3);
        t.join(0, 0, 2, Perm4::IDENTITY).unwrap();
        let comps = t.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].size(), 2);
        assert_eq!(comps[1].size(), 1);
        for c in &comps {
            c.validate_pairing().unwrap();
        }
    }
}
