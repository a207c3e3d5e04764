//! Finite topological spaces, their algebras of regular closed sets, and the
//! ultracontact of families with a common point.

use std::collections::BTreeSet;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result, Violation, WitnessValue};
use crate::limits::{self, EXPLICIT_MAX_ATOMS, SPACE_MAX_POINTS, TOPOLOGY_ENUM_MAX_POINTS};
use crate::uca::{check_explicit, FamilySystem, Ultracontact};

/// Point sets are bit masks over `points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopSpace {
    points: Vec<String>,
    opens: BTreeSet<u32>,
}

fn check_points(points: &[String]) -> Result<()> {
    if points.len() > SPACE_MAX_POINTS {
        return Err(Error::InvalidSpace(format!(
            "{} points, at most {SPACE_MAX_POINTS} are supported",
            points.len()
        )));
    }
    for (i, p) in points.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::InvalidSpace("empty point name".into()));
        }
        if points[..i].contains(p) {
            return Err(Error::InvalidSpace(format!("duplicate point {p:?}")));
        }
    }
    Ok(())
}

fn is_topology(full: u32, opens: &BTreeSet<u32>) -> std::result::Result<(), String> {
    if !opens.contains(&0) {
        return Err("the empty set is not open".into());
    }
    if !opens.contains(&full) {
        return Err("the whole space is not open".into());
    }
    for &u in opens {
        for &v in opens {
            if !opens.contains(&(u | v)) {
                return Err(format!("union of {u:#b} and {v:#b} is not open"));
            }
            if !opens.contains(&(u & v)) {
                return Err(format!("intersection of {u:#b} and {v:#b} is not open"));
            }
        }
    }
    Ok(())
}

pub fn make_space<S: AsRef<str>>(points: Vec<String>, opens: &[Vec<S>]) -> Result<FiniteTopSpace> {
    check_points(&points)?;
    let mut masks = Vec::with_capacity(opens.len());
    for open in opens {
        let mut m = 0u32;
        for p in open {
            let p = p.as_ref();
            let i = points
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| Error::InvalidSpace(format!("unknown point {p:?}")))?;
            m |= 1 << i;
        }
        masks.push(m);
    }
    FiniteTopSpace::from_masks(points, masks)
}

impl FiniteTopSpace {
    pub fn from_masks(points: Vec<String>, opens: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_points(&points)?;
        let full = (1u32 << points.len()) - 1;
        let opens: BTreeSet<u32> = opens.into_iter().collect();
        if let Some(&bad) = opens.iter().find(|&&u| u & !full != 0) {
            return Err(Error::InvalidSpace(format!("open set {bad:#b} is out of range")));
        }
        is_topology(full, &opens).map_err(Error::InvalidSpace)?;
        Ok(Self { points, opens })
    }

    pub fn discrete(points: Vec<String>) -> Result<Self> {
        let n = points.len();
        Self::from_masks(points, 0..1u32 << n)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.points.len()) - 1
    }

    pub fn opens(&self) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().copied()
    }

    pub fn open_names(&self) -> Vec<Vec<String>> {
        let mut v: Vec<u32> = self.opens().collect();
        v.sort_by_key(|&u| (u.count_ones(), u));
        v.into_iter().map(|u| self.names_of(u)).collect()
    }

    pub fn names_of(&self, a: u32) -> Vec<String> {
        (0..self.points.len())
            .filter(|i| a >> i & 1 == 1)
            .map(|i| self.points[i].clone())
            .collect()
    }

    pub fn interior(&self, a: u32) -> u32 {
        self.opens.iter().filter(|&&u| u & !a == 0).fold(0, |acc, &u| acc | u)
    }

    pub fn closure(&self, a: u32) -> u32 {
        let full = self.full_mask();
        full & !self.interior(full & !a)
    }

    pub fn is_regular_closed(&self, a: u32) -> bool {
        self.closure(self.interior(a)) == a
    }
}

/// The Boolean algebra of regular closed sets of a finite space. Its atoms
/// are the minimal nonempty regular closed sets and the element with mask
/// `m` has the union of the extents of the atoms in `m` as its point set.
#[derive(Debug, Clone)]
pub struct RegularClosedAlgebra {
    space: FiniteTopSpace,
    alg: FiniteBooleanAlgebra,
    extents: Vec<u32>,
}

impl RegularClosedAlgebra {
    pub fn algebra(&self) -> &FiniteBooleanAlgebra {
        &self.alg
    }

    pub fn space(&self) -> &FiniteTopSpace {
        &self.space
    }

    /// Point set of the element with mask `m`.
    pub fn extent(&self, m: u32) -> u32 {
        self.extents[m as usize]
    }

    pub fn extents(&self) -> &[u32] {
        &self.extents
    }
}

pub fn rc_algebra(space: &FiniteTopSpace) -> Result<RegularClosedAlgebra> {
    let full = space.full_mask();
    let rc: Vec<u32> = (0..=full).filter(|&a| space.is_regular_closed(a)).collect();
    let atoms: Vec<u32> = rc
        .iter()
        .copied()
        .filter(|&a| a != 0 && !rc.iter().any(|&b| b != 0 && b != a && b & !a == 0))
        .collect();
    let names: Vec<String> = atoms
        .iter()
        .map(|&a| format!("{{{}}}", space.names_of(a).join(",")))
        .collect();
    let alg = FiniteBooleanAlgebra::new(names)?;
    let extents: Vec<u32> = (0..=alg.top_mask())
        .map(|m| {
            (0..atoms.len())
                .filter(|i| m >> i & 1 == 1)
                .fold(0, |acc, i| acc | atoms[i])
        })
        .collect();
    let boolean = |msg: &str| Violation::new(Axiom::Boolean, msg.to_string());
    if rc.len() != extents.len() {
        let msg = format!(
            "{} regular closed sets but {} atoms",
            rc.len(),
            atoms.len()
        );
        return Err(boolean(&msg).into());
    }
    let ci = |a: u32| space.closure(space.interior(a));
    for (m, &a) in extents.iter().enumerate() {
        let m = m as u32;
        if !space.is_regular_closed(a) {
            return Err(boolean("a union of minimal regular closed sets is not regular closed")
                .with("set", WitnessValue::Points(space.names_of(a)))
                .into());
        }
        if space.closure(full & !a) != extents[(alg.top_mask() & !m) as usize] {
            return Err(boolean("complement disagrees with the closure of the set complement")
                .with("set", WitnessValue::Points(space.names_of(a)))
                .into());
        }
        for (k, &b) in extents.iter().enumerate() {
            if ci(a & b) != extents[(m & k as u32) as usize] {
                return Err(boolean("meet disagrees with the regular closure of the intersection")
                    .with("left", WitnessValue::Points(space.names_of(a)))
                    .with("right", WitnessValue::Points(space.names_of(b)))
                    .into());
            }
        }
    }
    Ok(RegularClosedAlgebra {
        space: space.clone(),
        alg,
        extents,
    })
}

/// Nonempty families of regular closed sets whose point sets share a point.
///
/// With at most four atoms the family system is built from this definition
/// and run through the axiom checker. Larger algebras go straight to faces:
/// the face of a point is the set of atoms containing it.
pub fn intersection_uc(rc: &RegularClosedAlgebra) -> Result<Ultracontact<'_>> {
    let alg = &rc.alg;
    let n = alg.n_atoms();
    if n <= EXPLICIT_MAX_ATOMS {
        let mut sys = FamilySystem::new(alg)?;
        let full = rc.space.full_mask();
        for code in 1u64..1 << alg.carrier_size() {
            let common = ElemSet::from_code(n, code)
                .iter()
                .fold(full, |acc, m| acc & rc.extent(m));
            if common != 0 {
                sys.insert_code(code);
            }
        }
        return Ok(check_explicit(&sys)?);
    }
    Ok(point_faces_uc(rc))
}

/// The same ultracontact, read off the points without materializing families.
pub fn point_faces_uc(rc: &RegularClosedAlgebra) -> Ultracontact<'_> {
    let alg = &rc.alg;
    let n = alg.n_atoms();
    let point_faces = (0..rc.space.n_points()).map(|p| {
        (0..n)
            .filter(|&i| rc.extent(1 << i) >> p & 1 == 1)
            .fold(0u32, |acc, i| acc | 1 << i)
    });
    let faces = ElemSet::from_masks(n, point_faces).down_closure().without(0);
    Ultracontact::from_faces(alg, faces)
}

/// Every topology on `points`, in ascending order of the sorted open masks.
pub fn enumerate_topologies(points: &[String]) -> Result<Vec<FiniteTopSpace>> {
    limits::ensure("topology enumeration", points.len(), TOPOLOGY_ENUM_MAX_POINTS)?;
    check_points(points)?;
    let full = (1u32 << points.len()) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << middle.len() {
        let mut opens: BTreeSet<u32> = [0, full].into();
        opens.extend((0..middle.len()).filter(|i| choice >> i & 1 == 1).map(|i| middle[i]));
        if is_topology(full, &opens).is_ok() {
            out.push(FiniteTopSpace {
                points: points.to_vec(),
                opens,
            });
        }
    }
    Ok(out)
}
