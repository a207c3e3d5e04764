//! Abstract simplicial complexes on the atoms, and the order isomorphism
//! between them and ultracontacts of a finite algebra.

use std::fmt;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result, Violation, WitnessValue};
use crate::limits::{self, MAX_ATOMS, UC_ENUM_CEILING};
use crate::uca::Ultracontact;

/// Faces are nonempty vertex sets encoded as bit masks over `vertices`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: ElemSet,
}

impl SimplicialComplex {
    /// Unchecked; run [`check_complex`] before trusting the axioms.
    pub fn from_masks(vertices: Vec<String>, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        limits::ensure("a simplicial complex", vertices.len(), MAX_ATOMS)?;
        let n = vertices.len();
        let top = (1u32 << n) - 1;
        let mut set = ElemSet::empty(n);
        for h in faces {
            if h == 0 || h & !top != 0 {
                return Err(Error::InvalidDocument(format!("face mask {h:#b} is empty or out of range")));
            }
            set.insert(h);
        }
        Ok(Self { vertices, faces: set })
    }

    /// Unchecked; faces are given by vertex names.
    pub fn from_names<S: AsRef<str>>(vertices: Vec<String>, faces: &[Vec<S>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            if face.is_empty() {
                return Err(Error::InvalidDocument("a face is empty".into()));
            }
            let mut m = 0u32;
            for v in face {
                let v = v.as_ref();
                let i = vertices
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownAtom(v.to_string()))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Self::from_masks(vertices, masks)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn faces(&self) -> &ElemSet {
        &self.faces
    }

    /// Faces ordered by size, then by mask.
    pub fn face_masks(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.faces.iter().collect();
        v.sort_by_key(|&h| (h.count_ones(), h));
        v
    }

    pub fn face_names(&self) -> Vec<Vec<String>> {
        self.face_masks().into_iter().map(|h| self.names_of(h)).collect()
    }

    pub fn names_of(&self, h: u32) -> Vec<String> {
        (0..self.vertices.len())
            .filter(|i| h >> i & 1 == 1)
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    pub fn contains(&self, h: u32) -> bool {
        h != 0 && self.faces.contains(h)
    }

    pub fn is_subcomplex(&self, other: &SimplicialComplex) -> bool {
        self.vertices == other.vertices && self.faces.is_subset(&other.faces)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.ensure_same_vertices(other)?;
        Ok(Self {
            vertices: self.vertices.clone(),
            faces: self.faces.intersection(&other.faces),
        })
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        self.ensure_same_vertices(other)?;
        Ok(Self {
            vertices: self.vertices.clone(),
            faces: self.faces.union(&other.faces),
        })
    }

    fn ensure_same_vertices(&self, other: &SimplicialComplex) -> Result<()> {
        if self.vertices == other.vertices {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self
            .face_names()
            .into_iter()
            .map(|v| format!("{{{}}}", v.join(",")))
            .collect();
        write!(f, "{}", faces.join(" "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex({self})")
    }
}

/// Validates (SC1) and (SC2).
pub fn check_complex(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let face = |h: u32| WitnessValue::Face(c.names_of(h));
    for i in 0..c.n_vertices() {
        if !c.faces.contains(1 << i) {
            return Err(Violation::new(Axiom::SC1, "a vertex is not a face")
                .with("missing", face(1 << i))
                .into());
        }
    }
    for h in c.faces.iter() {
        let mut rest = h;
        while rest != 0 {
            let hi = 1u32 << (31 - rest.leading_zeros());
            rest &= !hi;
            let sub = h & !hi;
            if sub != 0 && !c.faces.contains(sub) {
                return Err(Violation::new(Axiom::SC2, "a nonempty subset of a face is missing")
                    .with("face", face(h))
                    .with("missing", face(sub))
                    .into());
            }
        }
    }
    Ok(c.clone())
}

/// Atom sets that are members of `K`.
pub fn sigma(k: &Ultracontact<'_>) -> SimplicialComplex {
    SimplicialComplex {
        vertices: k.algebra().atom_names().to_vec(),
        faces: k.faces().clone(),
    }
}

/// Nonempty families supported by some face.
pub fn sigma_inverse<'a>(alg: &'a FiniteBooleanAlgebra, c: &SimplicialComplex) -> Result<Ultracontact<'a>> {
    if c.vertices != alg.atom_names() {
        return Err(Error::InvalidDocument(format!(
            "complex vertices {:?} differ from the atoms {:?}",
            c.vertices,
            alg.atom_names()
        )));
    }
    let c = check_complex(c)?;
    Ok(Ultracontact::from_faces(alg, c.faces))
}

/// Face sets of all complexes on `n` vertices, in ascending order.
fn complex_face_sets(n: usize) -> Vec<ElemSet> {
    let candidates: Vec<u32> = (1u32..1 << n).filter(|h| h.count_ones() >= 2).collect();
    let singletons = ElemSet::from_masks(n, (0..n).map(|i| 1u32 << i));
    let mut out = Vec::new();
    // subsets precede supersets in numeric order, so every face's
    // codimension-one faces are decided before the face itself
    fn go(cands: &[u32], i: usize, cur: &mut ElemSet, out: &mut Vec<ElemSet>) {
        let Some(&h) = cands.get(i) else {
            out.push(cur.clone());
            return;
        };
        go(cands, i + 1, cur, out);
        let mut bits = h;
        let mut allowed = true;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits &= bits - 1;
            if !cur.contains(h & !b) {
                allowed = false;
                break;
            }
        }
        if allowed {
            cur.insert(h);
            go(cands, i + 1, cur, out);
            cur.remove(h);
        }
    }
    go(&candidates, 0, &mut singletons.clone(), &mut out);
    out.sort();
    out
}

pub fn enumerate_complexes(vertices: &[String]) -> Result<Vec<SimplicialComplex>> {
    limits::ensure("complex enumeration", vertices.len(), UC_ENUM_CEILING)?;
    if vertices.is_empty() {
        return Err(Error::TrivialAlgebra);
    }
    Ok(complex_face_sets(vertices.len())
        .into_iter()
        .map(|faces| SimplicialComplex {
            vertices: vertices.to_vec(),
            faces,
        })
        .collect())
}

/// Every ultracontact on `alg`, obtained through the complexes on its atoms.
pub fn enumerate_ucs(alg: &FiniteBooleanAlgebra) -> Result<Vec<Ultracontact<'_>>> {
    limits::ensure("ultracontact enumeration", alg.n_atoms(), UC_ENUM_CEILING)?;
    Ok(complex_face_sets(alg.n_atoms())
        .into_iter()
        .map(|faces| Ultracontact::from_faces(alg, faces))
        .collect())
}
