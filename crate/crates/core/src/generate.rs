//! Reproducible test instances: intervals, geometric progressions, seeded
//! random sets, and towers built by repeated extension.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{GroundSet, Limits};
use crate::error::{Error, Result};
use crate::group::AmbientGroup;
use crate::sidon::extend_bhk;

/// A textual instance description:
/// `interval:n`, `powers:g=..,count=..` or `random:seed=..,n=..,max=..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Interval(i64),
    Powers {
        base: i64,
        count: u32,
    },
    Random {
        seed: Option<u64>,
        n: usize,
        max: i64,
    },
}

fn parse_err(spec: &str, why: &str) -> Error {
    Error::Parse(format!("generator `{spec}`: {why}"))
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
        let mut seed = None;
        let (mut base, mut count, mut n, mut max) = (None, None, None, None);
        let number = |v: &str| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(spec, "bad number"))
        };
        if kind == "interval" {
            return Ok(GeneratorSpec::Interval(number(args)?));
        }
        for kv in args.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| parse_err(spec, "expected key=value"))?;
            let v = number(v)?;
            match k.trim() {
                "seed" => seed = Some(v as u64),
                "g" => base = Some(v),
                "count" => count = Some(v),
                "n" => n = Some(v),
                "max" => max = Some(v),
                other => return Err(parse_err(spec, &format!("unknown key `{other}`"))),
            }
        }
        match kind {
            "powers" => {
                let base = base.ok_or_else(|| parse_err(spec, "missing g"))?;
                let count = count.ok_or_else(|| parse_err(spec, "missing count"))?;
                if base < 2 || !(0..=62).contains(&count) {
                    return Err(parse_err(spec, "need g >= 2 and 0 <= count <= 62"));
                }
                Ok(GeneratorSpec::Powers {
                    base,
                    count: count as u32,
                })
            }
            "random" => {
                let n = n.ok_or_else(|| parse_err(spec, "missing n"))?;
                let max = max.ok_or_else(|| parse_err(spec, "missing max"))?;
                if n < 0 || max < 1 {
                    return Err(parse_err(spec, "need n >= 0 and max >= 1"));
                }
                Ok(GeneratorSpec::Random {
                    seed,
                    n: n as usize,
                    max,
                })
            }
            _ => Err(parse_err(spec, "unknown generator")),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Interval(n) => write!(f, "interval:{n}"),
            GeneratorSpec::Powers { base, count } => write!(f, "powers:g={base},count={count}"),
            GeneratorSpec::Random { seed, n, max } => match seed {
                Some(s) => write!(f, "random:seed={s},n={n},max={max}"),
                None => write!(f, "random:n={n},max={max}"),
            },
        }
    }
}

impl GeneratorSpec {
    /// Materializes the instance; `default_seed` fills in a missing seed.
    pub fn build(&self, group: AmbientGroup, default_seed: u64) -> Result<GroundSet> {
        match *self {
            GeneratorSpec::Interval(n) => GroundSet::new(group, 1..=n),
            GeneratorSpec::Powers { base, count } => GroundSet::new(group, powers(base, count)?),
            GeneratorSpec::Random { seed, n, max } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(default_seed));
                random_set(&mut rng, group, n, max)
            }
        }
    }
}

/// `g, g^2, ..., g^count`.
pub fn powers(base: i64, count: u32) -> Result<Vec<i64>> {
    (1..=count)
        .map(|i| {
            base.checked_pow(i)
                .ok_or(Error::Overflow("geometric progression"))
        })
        .collect()
}

/// `n` distinct group elements drawn uniformly from the images of `1..=max`.
pub fn random_set<R: Rng>(
    rng: &mut R,
    group: AmbientGroup,
    n: usize,
    max: i64,
) -> Result<GroundSet> {
    let mut pool: Vec<i64> = match group.modulus() {
        Some(m) if m <= max => (0..m).collect(),
        _ => (1..=max).collect(),
    };
    pool.sort_unstable();
    if n > pool.len() {
        return Err(crate::error::usage(format!(
            "cannot draw {n} distinct elements from {} candidates",
            pool.len()
        )));
    }
    let picked = sample(rng, pool.len(), n).into_iter().map(|i| pool[i]);
    GroundSet::new(group, picked)
}

/// Seeded corpus of small sets: lengths in `1..=max_len`, values in
/// `1..=max_value`. With `modular`, each set lives in `Z/nZ` for a random
/// `n` in `2..=max_value`.
pub fn random_corpus(
    seed: u64,
    count: usize,
    max_len: usize,
    max_value: i64,
    modular: bool,
) -> Vec<GroundSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let group = if modular {
                AmbientGroup::CyclicMod(rng.gen_range(2..=max_value))
            } else {
                AmbientGroup::Integers
            };
            let cap = match group.modulus() {
                Some(m) => max_len.min(m as usize),
                None => max_len,
            };
            let n = rng.gen_range(1..=cap);
            random_set(&mut rng, group, n, max_value).expect("length bounded by the pool")
        })
        .collect()
}

/// `start` followed by `steps` extensions with `b = h max(A) + 1`.
pub fn extension_tower(
    start: &GroundSet,
    h: usize,
    k: usize,
    steps: usize,
    limits: &Limits,
) -> Result<Vec<GroundSet>> {
    let mut out = vec![start.clone()];
    for _ in 0..steps {
        let last = out.last().expect("tower starts nonempty");
        let max = last
            .max()
            .ok_or_else(|| crate::error::usage("empty start set"))?;
        let bound = last.group().scale(h as u64, max)?;
        let b = last.group().add(bound, last.element(1))?;
        out.push(extend_bhk(last, h, k, b, limits)?);
    }
    Ok(out)
}
