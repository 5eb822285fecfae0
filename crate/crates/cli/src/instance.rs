//! Instances named on the command line: a digraph file or a generator spec.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use redei_berge::digraph::{Digraph, MAX_VERTICES};

/// Resolves `spec` as a file if one exists at that path, otherwise as a generator:
/// `complete:n`, `discrete:n`, `path:n`, `cycle:n`, `random:n:p[:seed]`,
/// `tournament:n[:seed]`. A missing seed falls back to `default_seed`.
pub fn load(spec: &str, default_seed: u64) -> Result<Digraph, String> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{spec}: {e}"))?;
        return Digraph::parse_text(&text).map_err(|e| format!("{spec}: {e}"));
    }
    generate(spec, default_seed)
}

pub fn generate(spec: &str, default_seed: u64) -> Result<Digraph, String> {
    let fields: Vec<&str> = spec.split(':').collect();
    let bad = || format!("unrecognized instance {spec:?}: not a file or generator spec");
    let n: usize = fields
        .get(1)
        .ok_or_else(bad)?
        .parse()
        .map_err(|_| format!("{spec}: bad vertex count"))?;
    if n > MAX_VERTICES {
        return Err(format!("{spec}: at most {MAX_VERTICES} vertices"));
    }
    let seed = |i: usize| -> Result<u64, String> {
        match fields.get(i) {
            None => Ok(default_seed),
            Some(s) => s.parse().map_err(|_| format!("{spec}: bad seed {s:?}")),
        }
    };
    let arity = |min: usize, max: usize| {
        if fields.len() < min || fields.len() > max {
            Err(format!("{spec}: wrong number of fields"))
        } else {
            Ok(())
        }
    };
    match fields[0] {
        "complete" => arity(2, 2).map(|_| Digraph::complete(n)),
        "discrete" => arity(2, 2).map(|_| Digraph::discrete(n)),
        "path" => arity(2, 2).map(|_| Digraph::path(n)),
        "cycle" => arity(2, 2).map(|_| Digraph::cycle(n)),
        "random" => {
            arity(3, 4)?;
            let p: f64 = fields[2]
                .parse()
                .map_err(|_| format!("{spec}: bad edge probability"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("{spec}: edge probability must lie in [0, 1]"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed(3)?);
            Ok(Digraph::random(n, p, &mut rng))
        }
        "tournament" => {
            arity(2, 3)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed(2)?);
            Ok(Digraph::random_tournament(n, &mut rng))
        }
        _ => Err(bad()),
    }
}
