use super::sexpr::{read_all, read_one, ParseError, ParseErrorKind as K, SExpr};
use crate::el::{Axiom, Concept, Symbol, TBox};
use crate::eli::{EliAxiom, EliRhs, NameConjunction, Role};

const KEYWORDS: &[&str] = &["top", "and", "some", "all", "inv", "implies", "equiv", "rimplies"];

fn name(e: &SExpr) -> Result<Symbol, ParseError> {
    match e.atom() {
        Some(a) if !KEYWORDS.contains(&a) => Ok(Symbol::new(a)),
        Some(a) => Err(ParseError::new(e.pos(), K::NotAllowed(a.to_string()))),
        None => Err(ParseError::new(e.pos(), K::Expected("a name"))),
    }
}

fn args<'a>(e: &'a SExpr, what: &'static str) -> Result<(&'a str, &'a [SExpr]), ParseError> {
    e.call().ok_or_else(|| ParseError::new(e.pos(), K::Expected(what)))
}

fn arity(e: &SExpr, rest: &[SExpr], n: usize, what: &'static str) -> Result<(), ParseError> {
    if rest.len() == n {
        Ok(())
    } else {
        Err(ParseError::new(e.pos(), K::Expected(what)))
    }
}

fn role(e: &SExpr) -> Result<Role, ParseError> {
    if e.atom().is_some() {
        return Ok(Role::new(name(e)?));
    }
    let (head, rest) = args(e, "a role")?;
    if head != "inv" {
        return Err(ParseError::new(e.pos(), K::UnknownHead(head.to_string())));
    }
    arity(e, rest, 1, "(inv ROLE)")?;
    Ok(Role::new(name(&rest[0])?).inv())
}

pub(crate) fn el_concept(e: &SExpr) -> Result<Concept, ParseError> {
    if let Some(a) = e.atom() {
        return if a == "top" { Ok(Concept::Top) } else { Ok(Concept::Name(name(e)?)) };
    }
    let (head, rest) = args(e, "a concept")?;
    match head {
        "and" => {
            if rest.len() < 2 {
                return Err(ParseError::new(e.pos(), K::Expected("at least two conjuncts")));
            }
            Ok(Concept::conjunction(rest.iter().map(el_concept).collect::<Result<_, _>>()?))
        }
        "some" => {
            arity(e, rest, 2, "(some ROLE concept)")?;
            let r = role(&rest[0])?;
            if r.inverse {
                return Err(ParseError::new(rest[0].pos(), K::NotAllowed("inv".into())));
            }
            Ok(Concept::Some(r.name, Box::new(el_concept(&rest[1])?)))
        }
        "all" | "inv" => Err(ParseError::new(e.pos(), K::NotAllowed(head.to_string()))),
        _ => Err(ParseError::new(e.pos(), K::UnknownHead(head.to_string()))),
    }
}

pub(crate) fn el_axiom(e: &SExpr) -> Result<Axiom, ParseError> {
    let (head, rest) = args(e, "an axiom")?;
    match head {
        "implies" => {
            arity(e, rest, 2, "(implies concept concept)")?;
            Ok(Axiom::Gci(el_concept(&rest[0])?, el_concept(&rest[1])?))
        }
        "equiv" => {
            arity(e, rest, 2, "(equiv concept concept)")?;
            Ok(Axiom::Equivalence(el_concept(&rest[0])?, el_concept(&rest[1])?))
        }
        "rimplies" => {
            arity(e, rest, 2, "(rimplies ROLE ROLE)")?;
            Ok(Axiom::RoleInclusion(name(&rest[0])?, name(&rest[1])?))
        }
        _ => Err(ParseError::new(e.pos(), K::UnknownHead(head.to_string()))),
    }
}

fn conj(e: &SExpr) -> Result<NameConjunction, ParseError> {
    if let Some(a) = e.atom() {
        return if a == "top" { Ok(NameConjunction::top()) } else { Ok(NameConjunction::of([name(e)?])) };
    }
    let (head, rest) = args(e, "a conjunction of names")?;
    if head != "and" {
        return Err(ParseError::new(e.pos(), K::NotAllowed(head.to_string())));
    }
    let mut out = NameConjunction::top();
    for r in rest {
        out.0.extend(conj(r)?.0);
    }
    Ok(out)
}

pub(crate) fn eli_axiom(e: &SExpr) -> Result<EliAxiom, ParseError> {
    let (head, rest) = args(e, "an axiom")?;
    if head != "implies" {
        return Err(ParseError::new(e.pos(), K::UnknownHead(head.to_string())));
    }
    arity(e, rest, 2, "(implies concept concept)")?;
    let lhs = conj(&rest[0])?;
    let r = &rest[1];
    let rhs = if r.atom().is_some() {
        EliRhs::Name(name(r)?)
    } else {
        let (h, a) = args(r, "a right-hand side")?;
        match h {
            "some" => {
                arity(r, a, 2, "(some ROLE conjunction)")?;
                EliRhs::Exists(role(&a[0])?, conj(&a[1])?)
            }
            "all" => {
                arity(r, a, 2, "(all ROLE NAME)")?;
                EliRhs::Forall(role(&a[0])?, name(&a[1])?)
            }
            "and" => return Err(ParseError::new(r.pos(), K::NotAllowed("and".into()))),
            _ => return Err(ParseError::new(r.pos(), K::UnknownHead(h.to_string()))),
        }
    };
    Ok(EliAxiom { lhs, rhs })
}

/// Parses an EL(H) TBox; equivalences become two GCIs.
pub fn parse_tbox(text: &str) -> Result<TBox, ParseError> {
    let mut t = TBox::new();
    for e in read_all(text)? {
        t.insert(el_axiom(&e)?);
    }
    Ok(t)
}

pub fn parse_axiom(text: &str) -> Result<Axiom, ParseError> {
    el_axiom(&read_one(text)?)
}

pub fn parse_concept(text: &str) -> Result<Concept, ParseError> {
    el_concept(&read_one(text)?)
}

/// Parses a TBox in the ELI normal form.
pub fn parse_eli_tbox(text: &str) -> Result<Vec<EliAxiom>, ParseError> {
    let mut out: Vec<EliAxiom> = Vec::new();
    for e in read_all(text)? {
        let a = eli_axiom(&e)?;
        if !out.contains(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

pub fn parse_eli_axiom(text: &str) -> Result<EliAxiom, ParseError> {
    eli_axiom(&read_one(text)?)
}

/// One axiom per line.
pub fn write_tbox(t: &TBox) -> String {
    t.axioms().map(|a| format!("{a}\n")).collect()
}

pub fn write_eli_tbox(t: &[EliAxiom]) -> String {
    t.iter().map(|a| format!("{a}\n")).collect()
}
