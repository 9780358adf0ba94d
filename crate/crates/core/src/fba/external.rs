use std::cell::Cell;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use super::Forgetter;
use crate::el::{entails, Axiom, Concept, Signed, SymbolKind, TBox};
use crate::textio::{parse_tbox, write_tbox};

/// Delegates forgetting to an outside process through files in `dir`.
///
/// Step `k` writes `request-k.tbox`: a header line `forget <kind> <name>` followed
/// by the TBox. The tool answers with `response-k.tbox`, which should appear
/// atomically (write then rename). A missing or invalid answer fails the step.
#[derive(Debug)]
pub struct ExternalForgetter {
    pub dir: PathBuf,
    pub timeout: Duration,
    pub poll: Duration,
    next: Cell<usize>,
}

impl ExternalForgetter {
    pub fn new(dir: impl Into<PathBuf>, timeout: Duration) -> Self {
        ExternalForgetter { dir: dir.into(), timeout, poll: Duration::from_millis(20), next: Cell::new(0) }
    }

    pub fn request_path(&self, k: usize) -> PathBuf {
        self.dir.join(format!("request-{k}.tbox"))
    }

    pub fn response_path(&self, k: usize) -> PathBuf {
        self.dir.join(format!("response-{k}.tbox"))
    }
}

impl Forgetter for ExternalForgetter {
    fn forget(&self, tbox: &TBox, x: &Signed) -> Option<TBox> {
        let k = self.next.get();
        self.next.set(k + 1);
        let request = format!("forget {} {}\n{}", x.kind, x.name, write_tbox(tbox));
        std::fs::write(self.request_path(k), request).ok()?;
        let deadline = Instant::now() + self.timeout;
        let response = self.response_path(k);
        let text = loop {
            if let Ok(text) = std::fs::read_to_string(&response) {
                break text;
            }
            if Instant::now() >= deadline {
                return None;
            }
            std::thread::sleep(self.poll);
        };
        let after = parse_tbox(&text).ok()?;
        validate_step(tbox, &after, x).then_some(after)
    }
}

/// Sampled check of a forgetting step: `x` is gone, every axiom of `after` follows
/// from `before`, and every atomic subsumption between remaining concept names
/// that `before` entails also follows from `after`.
pub fn validate_step(before: &TBox, after: &TBox, x: &Signed) -> bool {
    if after.signature().contains(x) || !after.signature().is_subset(before.signature()) {
        return false;
    }
    let sound = after.axioms().all(|a| entails(before, a).unwrap_or(false));
    if !sound {
        return false;
    }
    let mut names: Vec<Concept> =
        before.signature().iter().filter(|s| s.kind == SymbolKind::Concept && *s != x).map(|s| Concept::Name(s.name.clone())).collect();
    names.push(Concept::Top);
    for a in &names {
        for b in &names {
            if a == b {
                continue;
            }
            let q = Axiom::Gci(a.clone(), b.clone());
            if entails(before, &q).unwrap_or(false) && !entails(after, &q).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fba::forget_symbol;

    #[test]
    fn answered_request_is_accepted() {
        let dir = tempfile::tempdir().unwrap();
        let f = ExternalForgetter::new(dir.path(), Duration::from_secs(5));
        let t = parse_tbox("(implies A C) (implies C B)").unwrap();
        let responder = {
            let req = f.request_path(0);
            let resp = f.response_path(0);
            std::thread::spawn(move || {
                while !req.exists() {
                    std::thread::sleep(Duration::from_millis(5));
                }
                let text = std::fs::read_to_string(&req).unwrap();
                assert!(text.starts_with("forget concept C\n"));
                let tmp = resp.with_extension("tmp");
                std::fs::write(&tmp, "(implies A B)\n").unwrap();
                std::fs::rename(tmp, resp).unwrap();
            })
        };
        let out = f.forget(&t, &Signed::concept("C")).unwrap();
        responder.join().unwrap();
        assert_eq!(out.to_vec(), vec![Axiom::atomic("A", "B")]);
    }

    #[test]
    fn timeout_and_bad_answers_fail() {
        let dir = tempfile::tempdir().unwrap();
        let f = ExternalForgetter::new(dir.path(), Duration::from_millis(30));
        let t = parse_tbox("(implies A C) (implies C B)").unwrap();
        assert!(f.forget(&t, &Signed::concept("C")).is_none());
        // unsound answer
        let after = parse_tbox("(implies B A)").unwrap();
        assert!(!validate_step(&t, &after, &Signed::concept("C")));
        // incomplete answer
        assert!(!validate_step(&t, &TBox::new(), &Signed::concept("C")));
        let good = forget_symbol(&t, &Signed::concept("C")).unwrap();
        assert!(validate_step(&t, &good, &Signed::concept("C")));
    }
}
