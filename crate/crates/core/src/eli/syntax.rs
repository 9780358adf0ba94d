use std::collections::BTreeSet;
use std::fmt;

use crate::el::Symbol;
use crate::hypergraph::Sentence;

/// A set of concept names; the empty set stands for `⊤`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NameConjunction(pub BTreeSet<Symbol>);

impl NameConjunction {
    pub fn top() -> Self {
        Self::default()
    }

    pub fn of<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        NameConjunction(names.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &Symbol) -> bool {
        self.0.contains(a)
    }

    pub fn is_subset(&self, other: &NameConjunction) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn names(&self) -> impl Iterator<Item = &Symbol> {
        self.0.iter()
    }

    pub fn with(&self, a: Symbol) -> NameConjunction {
        let mut s = self.0.clone();
        s.insert(a);
        NameConjunction(s)
    }

    fn size(&self) -> usize {
        self.0.len().max(1) + self.0.len().saturating_sub(1)
    }

    fn constructors(&self) -> usize {
        self.0.len().saturating_sub(1).max(usize::from(self.0.is_empty()))
    }
}

impl fmt::Display for NameConjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.len() {
            0 => f.write_str("top"),
            1 => write!(f, "{}", self.0.first().unwrap()),
            _ => {
                f.write_str("(and")?;
                for n in &self.0 {
                    write!(f, " {n}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A role name, possibly inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Role {
    pub name: Symbol,
    pub inverse: bool,
}

impl Role {
    pub fn new(name: impl Into<Symbol>) -> Self {
        Role { name: name.into(), inverse: false }
    }

    pub fn inv(&self) -> Role {
        Role { name: self.name.clone(), inverse: !self.inverse }
    }

    fn size(&self) -> usize {
        1 + usize::from(self.inverse)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "(inv {})", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EliRhs {
    Name(Symbol),
    Exists(Role, NameConjunction),
    Forall(Role, Symbol),
}

impl fmt::Display for EliRhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EliRhs::Name(a) => write!(f, "{a}"),
            EliRhs::Exists(r, m) => write!(f, "(some {r} {m})"),
            EliRhs::Forall(r, a) => write!(f, "(all {r} {a})"),
        }
    }
}

/// `K ⊑ C` with `K` a name conjunction and `C` one of `A`, `∃r.M`, `∀r.A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EliAxiom {
    pub lhs: NameConjunction,
    pub rhs: EliRhs,
}

impl EliAxiom {
    pub fn name(lhs: NameConjunction, a: impl Into<Symbol>) -> Self {
        EliAxiom { lhs, rhs: EliRhs::Name(a.into()) }
    }

    pub fn exists(lhs: NameConjunction, r: Role, filler: NameConjunction) -> Self {
        EliAxiom { lhs, rhs: EliRhs::Exists(r, filler) }
    }

    pub fn forall(lhs: NameConjunction, r: Role, a: impl Into<Symbol>) -> Self {
        EliAxiom { lhs, rhs: EliRhs::Forall(r, a.into()) }
    }

    /// Concept and role names occurring in the axiom.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out: BTreeSet<Symbol> = self.lhs.0.clone();
        match &self.rhs {
            EliRhs::Name(a) => {
                out.insert(a.clone());
            }
            EliRhs::Exists(r, m) => {
                out.insert(r.name.clone());
                out.extend(m.0.iter().cloned());
            }
            EliRhs::Forall(r, a) => {
                out.insert(r.name.clone());
                out.insert(a.clone());
            }
        }
        out
    }
}

impl fmt::Display for EliAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(implies {} {})", self.lhs, self.rhs)
    }
}

impl Sentence for EliAxiom {
    fn size(&self) -> usize {
        let rhs = match &self.rhs {
            EliRhs::Name(_) => 1,
            EliRhs::Exists(r, m) => 1 + r.size() + m.size(),
            EliRhs::Forall(r, _) => 2 + r.size(),
        };
        1 + self.lhs.size() + rhs
    }

    fn constructor_count(&self) -> usize {
        let rhs = match &self.rhs {
            EliRhs::Name(_) => 0,
            EliRhs::Exists(r, m) => 1 + usize::from(r.inverse) + m.constructors(),
            EliRhs::Forall(r, _) => 1 + usize::from(r.inverse),
        };
        1 + self.lhs.constructors() + rhs
    }
}
