use std::collections::{BTreeMap, BTreeSet};

use crate::el::{Axiom, Concept, Signed, SymbolKind, TBox};

/// Symbols of `tbox` outside `protected`, in the order they should be tried:
/// roles whose fillers are all `⊤`, concept names never under a restriction,
/// other concept names, remaining roles. Ties break by name.
pub fn forgetting_order(tbox: &TBox, protected: &BTreeSet<Signed>) -> Vec<Signed> {
    let mut nested_fillers: BTreeMap<&str, bool> = BTreeMap::new();
    let mut nested_names: BTreeSet<&str> = BTreeSet::new();
    for ax in tbox {
        let Axiom::Gci(l, r) = ax else { continue };
        for c in [l, r] {
            scan(c, false, &mut nested_fillers, &mut nested_names);
        }
    }
    let mut out: Vec<(u8, Signed)> = tbox
        .signature()
        .iter()
        .filter(|s| !protected.contains(s))
        .map(|s| {
            let tier = match s.kind {
                SymbolKind::Role if !nested_fillers.get(s.name.as_str()).copied().unwrap_or(false) => 0,
                SymbolKind::Concept if !nested_names.contains(s.name.as_str()) => 1,
                SymbolKind::Concept => 2,
                SymbolKind::Role => 3,
            };
            (tier, s.clone())
        })
        .collect();
    out.sort_by(|(ta, a), (tb, b)| ta.cmp(tb).then_with(|| a.name.cmp(&b.name)).then_with(|| a.kind.cmp(&b.kind)));
    out.into_iter().map(|(_, s)| s).collect()
}

fn scan<'a>(
    c: &'a Concept,
    nested: bool,
    fillers: &mut BTreeMap<&'a str, bool>,
    names: &mut BTreeSet<&'a str>,
) {
    match c {
        Concept::Top => {}
        Concept::Name(n) => {
            if nested {
                names.insert(n.as_str());
            }
        }
        Concept::And(l, r) => {
            scan(l, nested, fillers, names);
            scan(r, nested, fillers, names);
        }
        Concept::Some(role, f) => {
            *fillers.entry(role.as_str()).or_default() |= **f != Concept::Top;
            scan(f, true, fillers, names);
        }
    }
}
