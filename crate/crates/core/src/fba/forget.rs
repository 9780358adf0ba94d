use crate::el::{entails, Axiom, Concept, Signed, SymbolKind, TBox};

/// Most substitution instances a single axiom may expand into.
const MAX_INSTANCES: usize = 64;

/// The result of forgetting `x` in `tbox`, when the internal forgetter supports the pattern.
///
/// Concept names are eliminated by substituting their upper bounds into right-hand
/// occurrences, or their lower bounds into left-hand occurrences. Role names are
/// eliminated by resolving `A ⊑ ∃r.D` against `E ⊓ ∃r.C₁ ⊓ … ⊓ ∃r.Cₚ ⊑ B`.
pub fn forget_symbol(tbox: &TBox, x: &Signed) -> Option<TBox> {
    if !tbox.signature().contains(x) {
        return Some(tbox.clone());
    }
    let (keep, new) = match x.kind {
        SymbolKind::Concept => forget_concept(tbox, x)?,
        SymbolKind::Role => forget_role(tbox, x)?,
    };
    let mut out = TBox::new();
    for a in keep {
        out.insert(a);
    }
    for a in new {
        if let Some(a) = clean(a) {
            out.insert(a);
        }
    }
    debug_assert!(!out.signature().contains(x));
    Some(out)
}

type Parts = (Vec<Axiom>, Vec<Axiom>);

/// Splits `l ⊑ r₁ ⊓ … ⊓ rₖ` into one axiom per conjunct.
fn split<'a>(l: &'a Concept, r: &'a Concept) -> impl Iterator<Item = (Concept, Concept)> + 'a {
    r.conjuncts().into_iter().map(move |c| (l.clone(), c.clone()))
}

fn forget_concept(tbox: &TBox, x: &Signed) -> Option<Parts> {
    let xc = Concept::Name(x.name.clone());
    let mut keep = Vec::new();
    let mut rest = Vec::new();
    let mut pos: Vec<(Concept, Concept)> = Vec::new();
    let mut neg: Vec<(Concept, Concept)> = Vec::new();
    for ax in tbox {
        if !ax.mentions(x) {
            keep.push(ax.clone());
            continue;
        }
        let Axiom::Gci(l, r) = ax else { return None };
        for (l, c) in split(l, r) {
            match (l.mentions(x), c.mentions(x)) {
                (true, true) => return None,
                (false, true) => pos.push((l, c)),
                (true, false) => neg.push((l, c)),
                (false, false) => rest.push(Axiom::Gci(l, c)),
            }
        }
    }
    if neg.iter().all(|(l, _)| *l == xc) {
        let def = Concept::conjunction(neg.into_iter().map(|(_, d)| d).collect());
        rest.extend(pos.into_iter().map(|(l, c)| Axiom::Gci(l, c.substitute(&x.name, &def))));
        return Some((keep, rest));
    }
    if pos.iter().all(|(_, c)| *c == xc) {
        let lower: Vec<Concept> = pos.into_iter().map(|(l, _)| l).collect();
        if !lower.is_empty() {
            for (l, c) in neg {
                for inst in instances(&l, &x.name, &lower)? {
                    rest.push(Axiom::Gci(inst, c.clone()));
                }
            }
        }
        return Some((keep, rest));
    }
    None
}

/// Every way of replacing each occurrence of `x` in `c` by one of `by`.
fn instances(c: &Concept, x: &crate::el::Symbol, by: &[Concept]) -> Option<Vec<Concept>> {
    let out = match c {
        Concept::Name(n) if n == x => by.to_vec(),
        Concept::Top | Concept::Name(_) => vec![c.clone()],
        Concept::Some(r, f) => instances(f, x, by)?
            .into_iter()
            .map(|f| Concept::Some(r.clone(), Box::new(f)))
            .collect(),
        Concept::And(l, r) => {
            let ls = instances(l, x, by)?;
            let rs = instances(r, x, by)?;
            if ls.len() * rs.len() > MAX_INSTANCES {
                return None;
            }
            ls.iter().flat_map(|a| rs.iter().map(move |b| Concept::and(a.clone(), b.clone()))).collect()
        }
    };
    (out.len() <= MAX_INSTANCES).then_some(out)
}

fn forget_role(tbox: &TBox, r: &Signed) -> Option<Parts> {
    let mut keep = Vec::new();
    let mut rest = Vec::new();
    // A ⊑ ∃r.D
    let mut pos: Vec<(Concept, Concept)> = Vec::new();
    // E ⊓ ∃r.C₁ ⊓ … ⊓ ∃r.Cₚ ⊑ B
    let mut neg: Vec<(Vec<Concept>, Vec<Concept>, Concept)> = Vec::new();
    for ax in tbox {
        if !ax.mentions(r) {
            keep.push(ax.clone());
            continue;
        }
        let Axiom::Gci(l, rhs) = ax else { return None };
        for (l, c) in split(l, rhs) {
            match (l.mentions(r), c.mentions(r)) {
                (true, true) => return None,
                (false, false) => rest.push(Axiom::Gci(l, c)),
                (false, true) => match &c {
                    Concept::Some(s, d) if *s == r.name && !d.mentions(r) => pos.push((l, (**d).clone())),
                    _ => return None,
                },
                (true, false) => {
                    let mut e = Vec::new();
                    let mut fillers = Vec::new();
                    for part in l.conjuncts() {
                        match part {
                            Concept::Some(s, f) if *s == r.name && !f.mentions(r) => fillers.push((**f).clone()),
                            p if !p.mentions(r) => e.push(p.clone()),
                            _ => return None,
                        }
                    }
                    neg.push((e, fillers, c));
                }
            }
        }
    }
    let mut cache: Vec<((usize, Concept), bool)> = Vec::new();
    let mut below = |i: usize, d: &Concept, c: &Concept| -> Option<bool> {
        if *c == Concept::Top {
            return Some(true);
        }
        if let Some((_, b)) = cache.iter().find(|((j, cc), _)| *j == i && cc == c) {
            return Some(*b);
        }
        let b = entails(tbox, &Axiom::Gci(d.clone(), c.clone())).ok()?;
        cache.push(((i, c.clone()), b));
        Some(b)
    };
    for (e, fillers, b) in neg {
        let mut options: Vec<Vec<usize>> = Vec::new();
        for c in &fillers {
            let mut fits = Vec::new();
            for (i, (_, d)) in pos.iter().enumerate() {
                if below(i, d, c)? {
                    fits.push(i);
                }
            }
            options.push(fits);
        }
        let total = options.iter().try_fold(1usize, |acc, o| acc.checked_mul(o.len()))?;
        if total > MAX_INSTANCES {
            return None;
        }
        for choice in cartesian(&options) {
            let mut parts: Vec<Concept> = Vec::new();
            for i in choice {
                parts.push(pos[i].0.clone());
            }
            parts.extend(e.iter().cloned());
            rest.push(Axiom::Gci(Concept::conjunction(parts), b.clone()));
        }
    }
    Some((keep, rest))
}

fn cartesian(options: &[Vec<usize>]) -> Vec<Vec<usize>> {
    options.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push(o);
                    p
                })
            })
            .collect()
    })
}

/// Simplifies both sides and drops tautologies.
fn clean(a: Axiom) -> Option<Axiom> {
    let Axiom::Gci(l, r) = a else { return Some(a) };
    let (l, r) = (l.simplify(), r.simplify());
    if r == Concept::Top {
        return None;
    }
    let lc = l.conjuncts();
    if r.conjuncts().iter().all(|c| lc.contains(c)) {
        return None;
    }
    Some(Axiom::Gci(l, r))
}
