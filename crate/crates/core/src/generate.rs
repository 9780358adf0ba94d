//! Instance generators for the hitting-set and SAT reductions.

use thiserror::Error;

use crate::el::{Axiom, Concept, TBox};
use crate::eli::{EliAxiom, NameConjunction, Role};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("at least one set is required")]
    NoSets,
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("set {set} refers to element {element} outside the universe")]
    OutOfUniverse { set: usize, element: usize },
    #[error("at least one variable is required")]
    NoVariables,
    #[error("literal {0} is out of range")]
    BadLiteral(i32),
}

/// Universe `{u₁ … u_size}`, sets as 0-based element indices, and the hitting-set bound `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub bound: usize,
}

impl HittingSetInstance {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.sets.is_empty() {
            return Err(GenError::NoSets);
        }
        for (j, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Err(GenError::EmptySet(j + 1));
            }
            if let Some(&e) = s.iter().find(|&&e| e >= self.universe_size) {
                return Err(GenError::OutOfUniverse { set: j + 1, element: e });
            }
        }
        Ok(())
    }

    /// Size of a smallest hitting set, by enumeration.
    pub fn min_hitting_set(&self) -> usize {
        let n = self.universe_size;
        (0u32..1 << n)
            .filter(|mask| self.sets.iter().all(|s| s.iter().any(|&e| mask & (1 << e) != 0)))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap_or(usize::MAX)
    }
}

/// A generated EL instance with its goal and the proof-size bound `m + 3k + 1`.
#[derive(Clone, Debug)]
pub struct HittingSetTBox {
    pub tbox: TBox,
    pub goal: Axiom,
    pub bound: usize,
}

/// `A ⊑ Uᵢ` for every element, `Uᵢ ⊑ Sⱼ` for `uᵢ ∈ sⱼ`, and `S₁ ⊓ … ⊓ S_k ⊑ B`.
pub fn gen_hitting_set_tbox(inst: &HittingSetInstance) -> Result<HittingSetTBox, GenError> {
    inst.validate()?;
    let u = |i: usize| format!("U{}", i + 1);
    let s = |j: usize| format!("S{}", j + 1);
    let mut t = TBox::new();
    for i in 0..inst.universe_size {
        t.insert(Axiom::atomic("A", &u(i)));
    }
    for i in 0..inst.universe_size {
        for (j, set) in inst.sets.iter().enumerate() {
            if set.contains(&i) {
                t.insert(Axiom::atomic(&u(i), &s(j)));
            }
        }
    }
    let conj = Concept::conjunction((0..inst.sets.len()).map(|j| Concept::name(&s(j))).collect());
    t.insert(Axiom::gci(conj, Concept::name("B")));
    Ok(HittingSetTBox { tbox: t, goal: Axiom::atomic("A", "B"), bound: inst.bound + 3 * inst.sets.len() + 1 })
}

/// CNF over variables `1..=n`; literals are `±i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.variables == 0 {
            return Err(GenError::NoVariables);
        }
        for c in &self.clauses {
            if let Some(&l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > self.variables) {
                return Err(GenError::BadLiteral(l));
            }
        }
        Ok(())
    }

    /// Appends `xᵢ ∨ ¬xᵢ` for every variable that lacks such a clause.
    pub fn with_tautologies(&self) -> CnfFormula {
        let mut out = self.clone();
        for i in 1..=self.variables as i32 {
            let present = out.clauses.iter().any(|c| c.len() == 2 && c.contains(&i) && c.contains(&-i));
            if !present {
                out.clauses.push(vec![i, -i]);
            }
        }
        out
    }

    /// Truth-table check.
    pub fn is_satisfiable(&self) -> bool {
        (0u32..1 << self.variables).any(|v| {
            self.clauses.iter().all(|c| {
                c.iter().any(|&l| {
                    let bit = v & (1 << (l.unsigned_abs() - 1)) != 0;
                    bit == (l > 0)
                })
            })
        })
    }
}

/// A generated ELI instance, with goal `A ⊑ F` and the tree-size bound `2n + 4m + 9`.
#[derive(Clone, Debug)]
pub struct SatTBox {
    pub tbox: Vec<EliAxiom>,
    pub goal: EliAxiom,
    pub bound: usize,
    /// The formula actually encoded, including added tautology clauses.
    pub formula: CnfFormula,
}

pub fn gen_sat_eli_tbox(phi: &CnfFormula) -> Result<SatTBox, GenError> {
    phi.validate()?;
    let phi = phi.with_tautologies();
    let n = phi.variables;
    let m = phi.clauses.len();
    let r = Role::new("r");
    let one = |s: &str| NameConjunction::of([s]);
    let lit = |l: i32| if l > 0 { format!("X{l}") } else { format!("NX{}", -l) };
    let mut t: Vec<EliAxiom> = Vec::new();
    let mut push = |a: EliAxiom| {
        if !t.contains(&a) {
            t.push(a);
        }
    };
    for i in 1..=n as i32 {
        push(EliAxiom::forall(one("A"), r.clone(), lit(i).as_str()));
        push(EliAxiom::forall(one("A"), r.clone(), lit(-i).as_str()));
    }
    for (j, c) in phi.clauses.iter().enumerate() {
        for &l in c {
            push(EliAxiom::forall(one(&lit(l)), r.clone(), format!("C{}", j + 1).as_str()));
        }
    }
    push(EliAxiom::exists(one("A"), r.clone(), one("B")));
    push(EliAxiom::exists(one("B"), r.clone(), NameConjunction::top()));
    let all_c = NameConjunction::of((1..=m).map(|j| format!("C{j}")).collect::<Vec<_>>().iter().map(String::as_str));
    push(EliAxiom::forall(all_c, r.inv(), "F"));
    push(EliAxiom::forall(one("F"), r.inv(), "F"));
    Ok(SatTBox { tbox: t, goal: EliAxiom::name(one("A"), "F"), bound: 2 * n + 4 * m + 9, formula: phi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hitting_set_examples() {
        let one = HittingSetInstance { universe_size: 1, sets: vec![vec![0]], bound: 1 };
        let g = gen_hitting_set_tbox(&one).unwrap();
        assert_eq!((g.tbox.len(), g.bound), (3, 5));
        let two = HittingSetInstance { universe_size: 2, sets: vec![vec![0], vec![1]], bound: 2 };
        assert_eq!(gen_hitting_set_tbox(&two).unwrap().bound, 9);
        assert_eq!(two.min_hitting_set(), 2);
        let none = HittingSetInstance { universe_size: 2, sets: vec![], bound: 1 };
        assert_eq!(gen_hitting_set_tbox(&none).unwrap_err(), GenError::NoSets);
    }

    #[test]
    fn sat_examples() {
        let taut = CnfFormula { variables: 1, clauses: vec![vec![1, -1]] };
        let g = gen_sat_eli_tbox(&taut).unwrap();
        assert_eq!(g.bound, 15);
        assert!(g.formula.is_satisfiable());
        // A ⊑ ∀r.X1, A ⊑ ∀r.NX1, X1 ⊑ ∀r.C1, NX1 ⊑ ∀r.C1, and the four fixed axioms
        assert_eq!(g.tbox.len(), 8);
        let unsat = CnfFormula { variables: 1, clauses: vec![vec![1], vec![-1], vec![1, -1]] };
        let g = gen_sat_eli_tbox(&unsat).unwrap();
        assert_eq!(g.bound, 23);
        assert!(!g.formula.is_satisfiable());
        let zero = CnfFormula { variables: 0, clauses: vec![] };
        assert_eq!(gen_sat_eli_tbox(&zero).unwrap_err(), GenError::NoVariables);
    }
}
