//! EL(H) concepts, axioms and TBoxes.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexSet;

use crate::hypergraph::Sentence;

/// An interned concept or role identifier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// Whether a symbol names a concept or a role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    Concept,
    Role,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Concept => f.write_str("concept"),
            SymbolKind::Role => f.write_str("role"),
        }
    }
}

/// A symbol together with its kind, as stored in signatures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signed {
    pub kind: SymbolKind,
    pub name: Symbol,
}

impl Signed {
    pub fn concept(name: impl Into<Symbol>) -> Self {
        Signed { kind: SymbolKind::Concept, name: name.into() }
    }

    pub fn role(name: impl Into<Symbol>) -> Self {
        Signed { kind: SymbolKind::Role, name: name.into() }
    }
}

impl fmt::Display for Signed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// An EL concept. Conjunctions are binary; n-ary input is right-nested.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Name(Symbol),
    And(Box<Concept>, Box<Concept>),
    Some(Symbol, Box<Concept>),
}

impl Concept {
    pub fn name(s: &str) -> Concept {
        Concept::Name(Symbol::new(s))
    }

    pub fn and(left: Concept, right: Concept) -> Concept {
        Concept::And(Box::new(left), Box::new(right))
    }

    pub fn some(role: &str, filler: Concept) -> Concept {
        Concept::Some(Symbol::new(role), Box::new(filler))
    }

    /// Right-nested conjunction of the given concepts; `Top` when empty.
    pub fn conjunction(mut parts: Vec<Concept>) -> Concept {
        let Some(mut acc) = parts.pop() else {
            return Concept::Top;
        };
        while let Some(next) = parts.pop() {
            acc = Concept::and(next, acc);
        }
        acc
    }

    /// Top-level conjuncts, flattening nested conjunctions.
    pub fn conjuncts(&self) -> Vec<&Concept> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(c) = stack.pop() {
            match c {
                Concept::And(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                other => out.push(other),
            }
        }
        out
    }

    pub fn is_name(&self) -> bool {
        matches!(self, Concept::Name(_))
    }

    /// Every subconcept including `self`, in pre-order.
    pub fn subconcepts(&self) -> Vec<&Concept> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(c) = stack.pop() {
            out.push(c);
            match c {
                Concept::And(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                Concept::Some(_, f) => stack.push(f),
                _ => {}
            }
        }
        out
    }

    pub fn signature_into(&self, sig: &mut BTreeSet<Signed>) {
        match self {
            Concept::Top => {}
            Concept::Name(n) => {
                sig.insert(Signed { kind: SymbolKind::Concept, name: n.clone() });
            }
            Concept::And(l, r) => {
                l.signature_into(sig);
                r.signature_into(sig);
            }
            Concept::Some(role, f) => {
                sig.insert(Signed { kind: SymbolKind::Role, name: role.clone() });
                f.signature_into(sig);
            }
        }
    }

    pub fn mentions(&self, sym: &Signed) -> bool {
        match self {
            Concept::Top => false,
            Concept::Name(n) => sym.kind == SymbolKind::Concept && *n == sym.name,
            Concept::And(l, r) => l.mentions(sym) || r.mentions(sym),
            Concept::Some(role, f) => {
                (sym.kind == SymbolKind::Role && *role == sym.name) || f.mentions(sym)
            }
        }
    }

    /// Names plus constructor occurrences (`⊤`, `⊓`, `∃`).
    pub fn size(&self) -> usize {
        match self {
            Concept::Top | Concept::Name(_) => 1,
            Concept::And(l, r) => 1 + l.size() + r.size(),
            Concept::Some(_, f) => 2 + f.size(),
        }
    }

    pub fn constructor_count(&self) -> usize {
        match self {
            Concept::Top => 1,
            Concept::Name(_) => 0,
            Concept::And(l, r) => 1 + l.constructor_count() + r.constructor_count(),
            Concept::Some(_, f) => 1 + f.constructor_count(),
        }
    }

    /// Replaces every occurrence of concept name `name` by `by`.
    pub fn substitute(&self, name: &Symbol, by: &Concept) -> Concept {
        match self {
            Concept::Name(n) if n == name => by.clone(),
            Concept::Top | Concept::Name(_) => self.clone(),
            Concept::And(l, r) => Concept::and(l.substitute(name, by), r.substitute(name, by)),
            Concept::Some(role, f) => Concept::Some(role.clone(), Box::new(f.substitute(name, by))),
        }
    }

    /// Drops `⊤` conjuncts and duplicate conjuncts, keeping right-nesting.
    pub fn simplify(&self) -> Concept {
        match self {
            Concept::Top | Concept::Name(_) => self.clone(),
            Concept::Some(role, f) => Concept::Some(role.clone(), Box::new(f.simplify())),
            Concept::And(..) => {
                let mut parts: Vec<Concept> = Vec::new();
                for c in self.conjuncts() {
                    let c = c.simplify();
                    for part in c.conjuncts() {
                        if *part != Concept::Top && !parts.contains(part) {
                            parts.push(part.clone());
                        }
                    }
                }
                Concept::conjunction(parts)
            }
        }
    }

    /// Renames concept and role names through `f`.
    pub fn rename(&self, f: &impl Fn(&Symbol) -> Symbol) -> Concept {
        match self {
            Concept::Top => Concept::Top,
            Concept::Name(n) => Concept::Name(f(n)),
            Concept::And(l, r) => Concept::and(l.rename(f), r.rename(f)),
            Concept::Some(role, c) => Concept::Some(f(role), Box::new(c.rename(f))),
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::Top => f.write_str("top"),
            Concept::Name(n) => write!(f, "{n}"),
            Concept::And(l, r) => {
                // flatten the right spine only, so parsing restores the exact nesting
                write!(f, "(and {l}")?;
                let mut cur: &Concept = r;
                while let Concept::And(a, b) = cur {
                    write!(f, " {a}")?;
                    cur = b;
                }
                write!(f, " {cur})")
            }
            Concept::Some(r, c) => write!(f, "(some {r} {c})"),
        }
    }
}

impl fmt::Debug for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An EL(H) sentence. `Equivalence` only exists before ingestion into a [`TBox`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Gci(Concept, Concept),
    RoleInclusion(Symbol, Symbol),
    Equivalence(Concept, Concept),
}

impl Axiom {
    pub fn gci(lhs: Concept, rhs: Concept) -> Axiom {
        Axiom::Gci(lhs, rhs)
    }

    /// `A ⊑ B` for two concept names.
    pub fn atomic(lhs: &str, rhs: &str) -> Axiom {
        Axiom::Gci(Concept::name(lhs), Concept::name(rhs))
    }

    pub fn role_inclusion(sub: &str, sup: &str) -> Axiom {
        Axiom::RoleInclusion(Symbol::new(sub), Symbol::new(sup))
    }

    pub fn is_gci(&self) -> bool {
        matches!(self, Axiom::Gci(..))
    }

    /// Sugar expansion: an equivalence becomes two GCIs.
    pub fn expand(self) -> Vec<Axiom> {
        match self {
            Axiom::Equivalence(l, r) => vec![Axiom::Gci(l.clone(), r.clone()), Axiom::Gci(r, l)],
            other => vec![other],
        }
    }

    pub fn signature(&self) -> BTreeSet<Signed> {
        let mut sig = BTreeSet::new();
        self.signature_into(&mut sig);
        sig
    }

    pub fn signature_into(&self, sig: &mut BTreeSet<Signed>) {
        match self {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => {
                l.signature_into(sig);
                r.signature_into(sig);
            }
            Axiom::RoleInclusion(s, t) => {
                sig.insert(Signed::role(s.clone()));
                sig.insert(Signed::role(t.clone()));
            }
        }
    }

    pub fn mentions(&self, sym: &Signed) -> bool {
        match self {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => l.mentions(sym) || r.mentions(sym),
            Axiom::RoleInclusion(s, t) => {
                sym.kind == SymbolKind::Role && (*s == sym.name || *t == sym.name)
            }
        }
    }

    pub fn rename(&self, f: &impl Fn(&Symbol) -> Symbol) -> Axiom {
        match self {
            Axiom::Gci(l, r) => Axiom::Gci(l.rename(f), r.rename(f)),
            Axiom::Equivalence(l, r) => Axiom::Equivalence(l.rename(f), r.rename(f)),
            Axiom::RoleInclusion(s, t) => Axiom::RoleInclusion(f(s), f(t)),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Gci(l, r) => write!(f, "(implies {l} {r})"),
            Axiom::Equivalence(l, r) => write!(f, "(equiv {l} {r})"),
            Axiom::RoleInclusion(s, t) => write!(f, "(rimplies {s} {t})"),
        }
    }
}

impl fmt::Debug for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Sentence for Axiom {
    fn size(&self) -> usize {
        match self {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => 1 + l.size() + r.size(),
            Axiom::RoleInclusion(..) => 3,
        }
    }

    fn constructor_count(&self) -> usize {
        match self {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => {
                1 + l.constructor_count() + r.constructor_count()
            }
            Axiom::RoleInclusion(..) => 1,
        }
    }
}

/// A finite EL(H) theory: an insertion-ordered set of GCIs and role inclusions.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TBox {
    axioms: IndexSet<Axiom>,
    signature: BTreeSet<Signed>,
}

impl TBox {
    pub fn new() -> Self {
        TBox::default()
    }

    /// Adds an axiom, expanding equivalences. Returns whether anything was new.
    pub fn insert(&mut self, axiom: Axiom) -> bool {
        let mut changed = false;
        for ax in axiom.expand() {
            ax.signature_into(&mut self.signature);
            changed |= self.axioms.insert(ax);
        }
        changed
    }

    pub fn axioms(&self) -> impl ExactSizeIterator<Item = &Axiom> + '_ {
        self.axioms.iter()
    }

    pub fn to_vec(&self) -> Vec<Axiom> {
        self.axioms.iter().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    pub fn contains(&self, axiom: &Axiom) -> bool {
        self.axioms.contains(axiom)
    }

    pub fn signature(&self) -> &BTreeSet<Signed> {
        &self.signature
    }

    pub fn get(&self, index: usize) -> Option<&Axiom> {
        self.axioms.get_index(index)
    }

    /// Role names occurring in this TBox.
    pub fn roles(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.signature.iter().filter(|s| s.kind == SymbolKind::Role).map(|s| &s.name)
    }

    /// Concept names occurring in this TBox.
    pub fn concept_names(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.signature.iter().filter(|s| s.kind == SymbolKind::Concept).map(|s| &s.name)
    }

    /// The sub-TBox formed by the axioms at the given positions (in position order).
    pub fn subset(&self, keep: impl IntoIterator<Item = usize>) -> TBox {
        keep.into_iter().filter_map(|i| self.axioms.get_index(i).cloned()).collect()
    }
}

impl FromIterator<Axiom> for TBox {
    fn from_iter<I: IntoIterator<Item = Axiom>>(iter: I) -> Self {
        let mut t = TBox::new();
        for a in iter {
            t.insert(a);
        }
        t
    }
}

impl<'a> IntoIterator for &'a TBox {
    type Item = &'a Axiom;
    type IntoIter = indexmap::set::Iter<'a, Axiom>;

    fn into_iter(self) -> Self::IntoIter {
        self.axioms.iter()
    }
}

impl fmt::Display for TBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.axioms {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.axioms.iter()).finish()
    }
}
