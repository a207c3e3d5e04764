//! JSON documents for every structure kind.
//!
//! Elements are arrays of atom names in atom order, `[]` being zero. Stacks
//! travel as their minimal elements. Output is canonical: every list is
//! sorted, so loading and saving again reproduces the same text.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::boolalg::FiniteBooleanAlgebra;
use crate::contact::Relation;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::families::{Family, Stack};
use crate::limits::WITNESS_MAX_ATOMS;
use crate::simplicial::{sigma_inverse, SimplicialComplex};
use crate::stacksys::StackSystem;
use crate::topology::FiniteTopSpace;
use crate::uca::{check_explicit, FamilySystem, Ultracontact};

pub type ElementNames = Vec<String>;
pub type FamilyNames = Vec<ElementNames>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub atoms: Vec<String>,
}

impl AlgebraDoc {
    pub fn of(alg: &FiniteBooleanAlgebra) -> Self {
        Self {
            atoms: alg.atom_names().to_vec(),
        }
    }

    pub fn build(&self) -> Result<FiniteBooleanAlgebra> {
        FiniteBooleanAlgebra::new(self.atoms.iter().cloned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Doc {
    Algebra {
        atoms: Vec<String>,
    },
    Family {
        algebra: AlgebraDoc,
        members: FamilyNames,
    },
    /// Minimal elements of the stack.
    Stack {
        algebra: AlgebraDoc,
        members: FamilyNames,
    },
    /// Witness stacks, or maximal faces when the algebra is too large to
    /// list stacks.
    Uc {
        algebra: AlgebraDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witnesses: Option<Vec<FamilyNames>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        faces: Option<Vec<ElementNames>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        explicit: Option<Vec<FamilyNames>>,
    },
    StackSystem {
        algebra: AlgebraDoc,
        witnesses: Vec<FamilyNames>,
    },
    /// One orientation of each related pair.
    Contact {
        algebra: AlgebraDoc,
        pairs: Vec<[ElementNames; 2]>,
    },
    Hypercontact {
        algebra: AlgebraDoc,
        members: Vec<FamilyNames>,
    },
    Complex {
        vertices: Vec<String>,
        faces: Vec<ElementNames>,
    },
    Space {
        points: Vec<String>,
        opens: Vec<ElementNames>,
    },
}

fn infer_kind(obj: &serde_json::Map<String, Value>) -> Option<&'static str> {
    let has = |k: &str| obj.contains_key(k);
    if has("points") {
        Some("space")
    } else if has("vertices") {
        Some("complex")
    } else if has("pairs") {
        Some("contact")
    } else if has("witnesses") || has("faces") || has("explicit") {
        Some("uc")
    } else if has("members") {
        // families of families are hypercontacts
        let nested = obj["members"]
            .as_array()
            .and_then(|m| m.iter().find_map(|f| f.as_array().and_then(|f| f.first().cloned())))
            .is_some_and(|x| x.is_array());
        Some(if nested { "hypercontact" } else { "family" })
    } else if has("atoms") {
        Some("algebra")
    } else {
        None
    }
}

fn mask_of(alg: &FiniteBooleanAlgebra, names: &[String]) -> Result<u32> {
    Ok(alg.element_of(names)?.mask())
}

fn family_set(alg: &FiniteBooleanAlgebra, names: &FamilyNames) -> Result<ElemSet> {
    let mut set = ElemSet::empty(alg.n_atoms());
    for e in names {
        set.insert(mask_of(alg, e)?);
    }
    Ok(set)
}

fn set_names(alg: &FiniteBooleanAlgebra, set: &ElemSet) -> FamilyNames {
    set.iter().map(|x| alg.names_of(x)).collect()
}

fn stack_names(alg: &FiniteBooleanAlgebra, set: &ElemSet) -> FamilyNames {
    set_names(alg, &set.minimal())
}

fn by_size(names: &mut [ElementNames], order: &[String]) {
    let key = |v: &ElementNames| -> (usize, Vec<usize>) {
        (v.len(), v.iter().map(|s| order.iter().position(|o| o == s).unwrap_or(usize::MAX)).collect())
    };
    names.sort_by_key(key);
}

impl Doc {
    pub fn parse(text: &str) -> Result<Doc> {
        let mut value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| Error::InvalidDocument("top level must be an object".into()))?;
        if !obj.contains_key("kind") {
            let kind = infer_kind(obj).ok_or_else(|| Error::InvalidDocument("cannot tell the document kind".into()))?;
            obj.insert("kind".into(), Value::String(kind.into()));
        }
        Ok(serde_json::from_value(value)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Doc> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidDocument(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|e| Error::InvalidDocument(format!("{}: {e}", path.display())))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Doc::Algebra { .. } => "algebra",
            Doc::Family { .. } => "family",
            Doc::Stack { .. } => "stack",
            Doc::Uc { .. } => "uc",
            Doc::StackSystem { .. } => "stack-system",
            Doc::Contact { .. } => "contact",
            Doc::Hypercontact { .. } => "hypercontact",
            Doc::Complex { .. } => "complex",
            Doc::Space { .. } => "space",
        }
    }

    /// The algebra the document lives on. Complexes yield the algebra whose
    /// atoms are their vertices.
    pub fn algebra(&self) -> Result<FiniteBooleanAlgebra> {
        match self {
            Doc::Algebra { atoms } => FiniteBooleanAlgebra::new(atoms.iter().cloned()),
            Doc::Family { algebra, .. }
            | Doc::Stack { algebra, .. }
            | Doc::Uc { algebra, .. }
            | Doc::StackSystem { algebra, .. }
            | Doc::Contact { algebra, .. }
            | Doc::Hypercontact { algebra, .. } => algebra.build(),
            Doc::Complex { vertices, .. } => FiniteBooleanAlgebra::new(vertices.iter().cloned()),
            Doc::Space { .. } => Err(Error::InvalidDocument("a space carries no algebra of its own".into())),
        }
    }

    /// Re-encodes through the domain types, which puts everything in
    /// canonical order.
    pub fn canonical(&self) -> Result<Doc> {
        let alg_or = || self.algebra();
        Ok(match self {
            Doc::Algebra { .. } => Doc::of_algebra(&alg_or()?),
            Doc::Family { .. } => {
                let alg = alg_or()?;
                Doc::of_family(&self.family(&alg)?)
            }
            Doc::Stack { .. } => {
                let alg = alg_or()?;
                Doc::of_stack(&self.stack(&alg)?)
            }
            Doc::Uc { explicit, .. } => {
                let alg = alg_or()?;
                Doc::of_uc(&self.uc(&alg)?, explicit.is_some())?
            }
            Doc::StackSystem { .. } => {
                let alg = alg_or()?;
                let stacks = self.stacks(&alg)?;
                let mut witnesses: Vec<ElemSet> = stacks.into_iter().map(|s| s.into_set()).collect();
                witnesses.sort();
                witnesses.dedup();
                Doc::StackSystem {
                    algebra: AlgebraDoc::of(&alg),
                    witnesses: witnesses.iter().map(|s| stack_names(&alg, s)).collect(),
                }
            }
            Doc::Contact { .. } => {
                let alg = alg_or()?;
                Doc::of_relation(&self.relation(&alg)?)
            }
            Doc::Hypercontact { .. } => {
                let alg = alg_or()?;
                Doc::of_family_system(&self.family_system(&alg)?)
            }
            Doc::Complex { .. } => Doc::of_complex(&self.complex()?),
            Doc::Space { .. } => Doc::of_space(&self.space()?),
        })
    }

    pub fn of_algebra(alg: &FiniteBooleanAlgebra) -> Doc {
        Doc::Algebra {
            atoms: alg.atom_names().to_vec(),
        }
    }

    pub fn of_family(f: &Family<'_>) -> Doc {
        Doc::Family {
            algebra: AlgebraDoc::of(f.algebra()),
            members: set_names(f.algebra(), f.set()),
        }
    }

    pub fn of_stack(s: &Stack<'_>) -> Doc {
        Doc::Stack {
            algebra: AlgebraDoc::of(s.algebra()),
            members: stack_names(s.algebra(), s.set()),
        }
    }

    /// Witness stacks up to five atoms, maximal faces beyond.
    pub fn of_uc(k: &Ultracontact<'_>, with_explicit: bool) -> Result<Doc> {
        let alg = k.algebra();
        let (witnesses, faces) = if alg.n_atoms() <= WITNESS_MAX_ATOMS {
            let w = k.stack_system()?;
            (Some(w.members().map(|s| stack_names(alg, s.set())).collect()), None)
        } else {
            let mut f: Vec<ElementNames> = k.maximal_faces().into_iter().map(|h| alg.names_of(h)).collect();
            by_size(&mut f, alg.atom_names());
            (None, Some(f))
        };
        let explicit = if with_explicit {
            let sys = k.to_explicit()?;
            Some(sys.members().families().map(|f| set_names(alg, f.set())).collect())
        } else {
            None
        };
        Ok(Doc::Uc {
            algebra: AlgebraDoc::of(alg),
            witnesses,
            faces,
            explicit,
        })
    }

    pub fn of_stack_system(s: &StackSystem<'_>) -> Doc {
        let alg = s.algebra();
        Doc::StackSystem {
            algebra: AlgebraDoc::of(alg),
            witnesses: s.members().map(|m| stack_names(alg, m.set())).collect(),
        }
    }

    pub fn of_relation(r: &Relation<'_>) -> Doc {
        let alg = r.algebra();
        Doc::Contact {
            algebra: AlgebraDoc::of(alg),
            pairs: r.pairs().into_iter().map(|(x, y)| [alg.names_of(x), alg.names_of(y)]).collect(),
        }
    }

    pub fn of_family_system(sys: &FamilySystem<'_>) -> Doc {
        let alg = sys.algebra();
        Doc::Hypercontact {
            algebra: AlgebraDoc::of(alg),
            members: sys.families().map(|f| set_names(alg, f.set())).collect(),
        }
    }

    pub fn of_complex(c: &SimplicialComplex) -> Doc {
        Doc::Complex {
            vertices: c.vertices().to_vec(),
            faces: c.face_names(),
        }
    }

    pub fn of_space(x: &FiniteTopSpace) -> Doc {
        Doc::Space {
            points: x.points().to_vec(),
            opens: x.open_names(),
        }
    }

    fn wrong(&self, want: &str) -> Error {
        Error::InvalidDocument(format!("expected a {want} document, got {}", self.kind()))
    }

    pub fn family<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Family<'a>> {
        match self {
            Doc::Family { members, .. } | Doc::Stack { members, .. } => {
                Ok(Family::from_set(alg, family_set(alg, members)?))
            }
            _ => Err(self.wrong("family")),
        }
    }

    /// A stack document is read as the stack its members generate.
    pub fn stack<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Stack<'a>> {
        match self {
            Doc::Stack { members, .. } => Ok(Stack::generated_by(alg, family_set(alg, members)?.iter())),
            Doc::Family { .. } => Stack::from_family(&self.family(alg)?),
            _ => Err(self.wrong("stack")),
        }
    }

    /// Witness stacks of a uc or stack-system document, unchecked.
    pub fn stacks<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Vec<Stack<'a>>> {
        let witnesses = match self {
            Doc::StackSystem { witnesses, .. } => witnesses,
            Doc::Uc {
                witnesses: Some(w), ..
            } => w,
            _ => return Err(self.wrong("stack-system")),
        };
        witnesses
            .iter()
            .map(|g| Ok(Stack::generated_by(alg, family_set(alg, g)?.iter())))
            .collect()
    }

    /// The explicit member list of a uc document, unchecked.
    pub fn explicit<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Option<FamilySystem<'a>>> {
        match self {
            Doc::Uc { explicit: Some(e), .. } => Ok(Some(system_of(alg, e)?)),
            Doc::Uc { .. } => Ok(None),
            _ => Err(self.wrong("uc")),
        }
    }

    /// Reads and validates an ultracontact. Witnesses are checked against
    /// the stack system axioms, faces against the complex axioms, and an
    /// explicit member list against the ultracontact axioms. When several
    /// encodings are present they must agree.
    pub fn uc<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Ultracontact<'a>> {
        let Doc::Uc {
            witnesses, faces, ..
        } = self
        else {
            return match self {
                Doc::StackSystem { .. } => Ultracontact::from_witnesses(alg, self.stacks(alg)?),
                Doc::Complex { .. } => sigma_inverse(alg, &self.complex()?),
                _ => Err(self.wrong("uc")),
            };
        };
        let mut found: Vec<Ultracontact<'a>> = Vec::new();
        if witnesses.is_some() {
            found.push(Ultracontact::from_witnesses(alg, self.stacks(alg)?)?);
        }
        if let Some(faces) = faces {
            let c = SimplicialComplex::from_names(alg.atom_names().to_vec(), faces)?;
            let all = c.faces().down_closure().without(0);
            let c = SimplicialComplex::from_masks(alg.atom_names().to_vec(), all.iter())?;
            found.push(sigma_inverse(alg, &c)?);
        }
        if let Some(sys) = self.explicit(alg)? {
            found.push(check_explicit(&sys)?);
        }
        let Some(first) = found.first() else {
            return Err(Error::InvalidDocument("a uc needs witnesses, faces or explicit members".into()));
        };
        if found.iter().any(|k| k != first) {
            return Err(Error::InvalidDocument("the encodings of the uc disagree".into()));
        }
        Ok(first.clone())
    }

    /// Contact pairs with their mirror images, unchecked.
    pub fn relation<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<Relation<'a>> {
        let Doc::Contact { pairs, .. } = self else {
            return Err(self.wrong("contact"));
        };
        let pairs = pairs
            .iter()
            .map(|[x, y]| Ok((mask_of(alg, x)?, mask_of(alg, y)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::from_pairs(alg, &pairs, true)
    }

    /// Hypercontact members, unchecked.
    pub fn family_system<'a>(&self, alg: &'a FiniteBooleanAlgebra) -> Result<FamilySystem<'a>> {
        match self {
            Doc::Hypercontact { members, .. } => system_of(alg, members),
            _ => Err(self.wrong("hypercontact")),
        }
    }

    /// The complex as written, unchecked.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        match self {
            Doc::Complex { vertices, faces } => SimplicialComplex::from_names(vertices.clone(), faces),
            _ => Err(self.wrong("complex")),
        }
    }

    pub fn space(&self) -> Result<FiniteTopSpace> {
        match self {
            Doc::Space { points, opens } => crate::topology::make_space(points.clone(), opens),
            _ => Err(self.wrong("space")),
        }
    }
}

fn system_of<'a>(alg: &'a FiniteBooleanAlgebra, members: &[FamilyNames]) -> Result<FamilySystem<'a>> {
    let mut sys = FamilySystem::new(alg)?;
    for m in members {
        sys.insert(&Family::from_set(alg, family_set(alg, m)?))?;
    }
    Ok(sys)
}
