use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use clap::{CommandFactory, Parser};
use gitkit_cli::args::Cli;
use gitkit_cli::registry::{HELPERS, REGISTRY};

const OPERATION_MODULES: &[(&str, &[&str])] = &[
    ("lie", &["lie.rs"]),
    ("characters", &["characters/mod.rs", "characters/laurent.rs"]),
    ("puzzles", &["puzzles.rs"]),
    ("horn", &["horn/mod.rs", "horn/jacobi.rs"]),
    ("torus_git", &["torus_git/mod.rs", "torus_git/descent.rs", "torus_git/nearest.rs"]),
    ("polytopes", &["polytopes.rs"]),
    ("localization", &["localization.rs"]),
];

/// Top-level `pub fn` names per module, read from the core sources.
fn core_functions() -> BTreeSet<String> {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/src");
    let mut out = BTreeSet::new();
    for (module, files) in OPERATION_MODULES {
        for f in *files {
            let text = std::fs::read_to_string(src.join(f)).unwrap();
            for line in text.lines() {
                if let Some(rest) = line.strip_prefix("pub fn ") {
                    let name: String = rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
                    if *f != "characters/laurent.rs" || name != "monomial_value" {
                        out.insert(format!("{module}::{name}"));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn every_core_operation_has_exactly_one_subcommand() {
    let mut owner: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for e in REGISTRY {
        for c in e.core {
            owner.entry(c).or_default().push(format!("{} {}", e.module, e.op));
        }
    }
    for (f, subs) in &owner {
        assert_eq!(subs.len(), 1, "{f} is exposed by {subs:?}");
        assert!(!HELPERS.contains(f), "{f} is both registered and a helper");
    }
    for f in core_functions() {
        assert!(owner.contains_key(f.as_str()) || HELPERS.contains(&f.as_str()), "{f} is not reachable from the CLI");
    }
    let known = core_functions();
    for f in owner.keys().chain(HELPERS) {
        if f.matches("::").count() == 1 {
            assert!(known.contains(*f), "registry names unknown function {f}");
        }
    }
}

#[test]
fn registry_matches_the_parser() {
    let registered: BTreeSet<(String, String)> =
        REGISTRY.iter().map(|e| (e.module.to_string(), e.op.to_string())).collect();
    assert_eq!(registered.len(), REGISTRY.len(), "duplicate registry entry");
    let mut parsed = BTreeSet::new();
    for m in Cli::command().get_subcommands() {
        for op in m.get_subcommands() {
            parsed.insert((m.get_name().to_string(), op.get_name().to_string()));
        }
    }
    assert_eq!(parsed, registered);
}

#[test]
fn registered_subcommands_parse() {
    for e in REGISTRY {
        let err = Cli::try_parse_from(["gitkit", e.module, e.op, "--help"]).unwrap_err();
        assert_eq!(err.kind(), clap::error::ErrorKind::DisplayHelp, "{} {}", e.module, e.op);
    }
}
