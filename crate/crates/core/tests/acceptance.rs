//! Exit criteria. Each criterion prints one PASS/FAIL line; the process
//! fails if any criterion fails.

use std::time::{Duration, Instant};

use serde_json::Value;
use sidon_matroid::combinat::representation_function;
use sidon_matroid::generate::{extension_tower, powers, random_corpus};
use sidon_matroid::matroid::MuCovering;
use sidon_matroid::oracle::{
    brute_exchange_violation, brute_independence_table, brute_is_bh, brute_maximal_independents,
    brute_mu_partition_exists, brute_proper_double_representations, brute_union_rank,
};
use sidon_matroid::sidon::find_proper_double_representations;
use sidon_matroid::{
    cli, is_bh, is_bhk, AmbientGroup, Element, GroundSet, Limits, PartitionMu, SidonMatroid,
};

const L: Limits = Limits::DEFAULT;
const Z: AmbientGroup = AmbientGroup::Integers;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(v: &[i64]) -> GroundSet {
    GroundSet::integers(v.iter().copied()).unwrap()
}

fn member(a: &GroundSet, h: usize, k: usize) -> bool {
    is_bhk(a, h, k, &L).unwrap().is_member()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let code = cli::run(
        [
            "sidon",
            "maximal",
            "--set",
            "1,2,3,4,5,6,7",
            "--h",
            "2",
            "--format",
            "json",
        ],
        &mut out,
        &mut Vec::new(),
    );
    within(Duration::from_secs(1), start)?;
    ensure(code == 0, || format!("exit code {code}"))?;
    let json: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let groups = json["groups"].as_array().ok_or("missing groups")?;
    let group = |size: u64| {
        groups
            .iter()
            .find(|g| g["size"] == size)
            .cloned()
            .unwrap_or(Value::Null)
    };
    let sets = |g: &Value| -> Vec<Vec<i64>> {
        serde_json::from_value(g["sets"].clone()).unwrap_or_default()
    };
    let (four, three) = (group(4), group(3));
    ensure(
        sets(&four) == vec![vec![1, 2, 5, 7], vec![1, 3, 6, 7]],
        || format!("size-4 group {four}"),
    )?;
    ensure(three["count"] == 18, || {
        format!("size-3 count {}", three["count"])
    })?;
    ensure(sets(&three).contains(&vec![1, 3, 4]), || {
        "{1,3,4} missing".into()
    })?;
    ensure(groups.len() == 2, || {
        format!("{} size groups", groups.len())
    })?;
    Ok(format!(
        "2 sets of size 4, 18 of size 3, in {:?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let a = set(&[1, 2, 3]);
    for h in [2usize, 3] {
        let top = 2 * h - 1;
        ensure(member(&a, top, 1), || format!("not in B_{{{top},1}}"))?;
        ensure(!member(&a, top, 2), || format!("in B_{{{top},2}}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("{1,2,3} in B_{3,1}\\B_{3,2} and B_{5,1}\\B_{5,2}".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let a = set(&[1, 14, 19, 20, 25, 38]);
    ensure(member(&a, 3, 1), || "not in B_{3,1}".into())?;
    let m = is_bh(&a, 2, &L).unwrap();
    let w = m.witness().ok_or("unexpectedly a Sidon set")?;
    ensure(w.representation().sum().value() == 39, || {
        format!("witness {w}")
    })?;
    ensure(w.certifies(&a), || "witness does not certify".into())?;
    let r = representation_function(&a, 2, Z.element(39)).unwrap();
    ensure(r == 3, || format!("r(39) = {r}"))?;
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "B_{{3,1}}, not B_2: witness {}, r(39) = 3",
        w.representation()
    ))
}

/// 500 sets in Z and 500 in Z/nZ, |A| <= 8, values <= 50.
fn identity_corpus() -> Vec<GroundSet> {
    let mut c = random_corpus(0x5eed_0004, 500, 8, 50, false);
    c.extend(random_corpus(0x5eed_0005, 500, 8, 50, true));
    c
}

fn criterion_4() -> Outcome {
    let corpus = identity_corpus();
    let mut checks = 0;
    for a in &corpus {
        for h in 2..=4usize {
            let bh = member(a, h, h);
            for k in h.div_ceil(2)..=h {
                ensure(member(a, h, k) == bh, || {
                    format!("{a} in {}: h = {h}, k = {k}", a.group())
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!(
        "{} sets, {checks} comparisons, zero violations",
        corpus.len()
    ))
}

fn criterion_5() -> Outcome {
    let corpus = identity_corpus();
    let mut checks = 0;
    for a in &corpus {
        let ctx = || format!("{a} in {}", a.group());
        for h in 2..=4usize {
            for k in 1..h {
                // B_h = B_{h,k} ∩ B_{h-k}
                ensure(
                    member(a, h, h) == (member(a, h, k) && member(a, h - k, h - k)),
                    || format!("split identity: {}, h = {h}, k = {k}", ctx()),
                )?;
                // B_{h,k+1} ⊆ B_{h,k}
                ensure(!member(a, h, k + 1) || member(a, h, k), || {
                    format!("nesting: {}, h = {h}, k = {k}", ctx())
                })?;
                checks += 2;
            }
            let top = 2 * h - 1;
            // B_{2h-1} = B_{2h-1,h-1} ∩ B_h
            let in_top = member(a, top, h - 1);
            ensure(member(a, top, top) == (in_top && member(a, h, h)), || {
                format!("odd-order identity: {}, h = {h}", ctx())
            })?;
            // B_{2h-1,h-1} ⊆ B_{2h-k,h-k}
            if in_top {
                for k in 1..h {
                    ensure(member(a, 2 * h - k, h - k), || {
                        format!("inclusion: {}, h = {h}, k = {k}", ctx())
                    })?;
                }
            }
            checks += h;
        }
    }
    Ok(format!(
        "{} sets, {checks} identity checks, zero violations",
        corpus.len()
    ))
}

fn criterion_6() -> Outcome {
    let tower = extension_tower(&set(&[1, 2, 3]), 3, 1, 10, &L).map_err(|e| e.to_string())?;
    for (i, a) in tower.iter().enumerate().skip(1) {
        let prev_max = tower[i - 1].max().unwrap().value();
        ensure(a.max().unwrap().value() == 3 * prev_max + 1, || {
            format!("step {i}: {a}")
        })?;
        ensure(member(a, 3, 1) && !member(a, 3, 2), || {
            format!("step {i}: {a} not in B_{{3,1}}\\B_{{3,2}}")
        })?;
    }
    Ok(format!(
        "10 extensions verified, last {}",
        tower.last().unwrap()
    ))
}

/// Validated B_{2h-1,h-1} instances with |X| <= 8, seeded, from Z and Z/nZ,
/// plus the worked examples.
fn matroid_corpus(h: usize) -> Vec<GroundSet> {
    let mut pool = random_corpus(0x3a70_0000 + h as u64, 3000, 8, 300, false);
    pool.extend(random_corpus(0x3a71_0000 + h as u64, 3000, 8, 60, true));
    let mut out: Vec<GroundSet> = Vec::new();
    // [integers, modular] x [X is B_h, X is not B_h]
    let mut taken = [[0usize; 2]; 2];
    for x in pool {
        if x.len() < 3 || !member(&x, 2 * h - 1, h - 1) {
            continue;
        }
        let family = usize::from(x.group() != Z);
        let hard = usize::from(!member(&x, h, h));
        let cap = if hard == 1 { 30 } else { 10 };
        if taken[family][hard] < cap {
            taken[family][hard] += 1;
            out.push(x);
        }
    }
    if h == 2 {
        out.push(set(&[1, 2, 3]));
        out.push(set(&[1, 14, 19, 20, 25, 38]));
        out.push(set(&[1, 2, 3, 10, 31, 94, 283, 850]));
    }
    out
}

fn nontrivial(corpus: &[GroundSet], h: usize) -> usize {
    corpus
        .iter()
        .filter(|x| !is_bh(x, h, &L).unwrap().is_member())
        .count()
}

fn for_matroid_corpus(mut f: impl FnMut(&GroundSet, usize) -> Result<(), String>) -> Outcome {
    let mut summary = Vec::new();
    for h in [2usize, 3] {
        let corpus = matroid_corpus(h);
        let hard = nontrivial(&corpus, h);
        ensure(hard >= 20, || {
            format!("h = {h}: only {hard} instances where X is not itself B_h")
        })?;
        for x in &corpus {
            f(x, h).map_err(|e| format!("X = {x} in {}, h = {h}: {e}", x.group()))?;
        }
        summary.push(format!(
            "h = {h}: {} instances ({hard} with X not B_h)",
            corpus.len()
        ));
    }
    Ok(summary.join("; "))
}

fn criterion_7() -> Outcome {
    for_matroid_corpus(|x, h| {
        let reps = brute_proper_double_representations(x, 2 * h - 1).unwrap();
        if let Some((l, r)) = reps.iter().find(|(l, _)| l.len() != h) {
            return Err(format!(
                "proper representation {l:?} = {r:?} of length {}",
                l.len()
            ));
        }
        let fast = find_proper_double_representations(x, 2 * h - 1, &L).unwrap();
        ensure(fast.len() == reps.len(), || {
            format!("fast path found {}, exhaustive {}", fast.len(), reps.len())
        })
    })
}

fn each_maximal_and_outside(
    x: &GroundSet,
    h: usize,
    mut f: impl FnMut(&[Element], Element) -> Result<(), String>,
) -> Result<(), String> {
    for a in brute_maximal_independents(x, h, &L).unwrap() {
        for &e in x.elements().iter().filter(|e| !a.contains(e)) {
            f(&a, e)?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for_matroid_corpus(|x, h| {
        each_maximal_and_outside(x, h, |a, e| {
            let ax = GroundSet::from_elements(x.group(), a.to_vec())
                .unwrap()
                .with(e);
            let n = brute_proper_double_representations(&ax, 2 * h - 1)
                .unwrap()
                .len();
            ensure(n == 1, || {
                format!("{ax} has {n} proper double representations")
            })
        })
    })
}

fn criterion_9() -> Outcome {
    for_matroid_corpus(|x, h| {
        let m = SidonMatroid::new(x.clone(), h, true).map_err(|e| e.to_string())?;
        each_maximal_and_outside(x, h, |a, e| {
            let exchange = m.exchange_set(a, e).map_err(|err| err.to_string())?;
            ensure(!exchange.is_empty(), || {
                format!("empty exchange set for {e}")
            })?;
            let ax = GroundSet::from_elements(x.group(), a.to_vec())
                .unwrap()
                .with(e);
            for s in exchange {
                ensure(brute_is_bh(&ax.without(s), h).unwrap(), || {
                    format!("({ax}) \\ {{{s}}} not B_{h}")
                })?;
            }
            Ok(())
        })?;
        let sizes: Vec<usize> = brute_maximal_independents(x, h, &L)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        ensure(sizes.iter().min() == sizes.iter().max(), || {
            format!("maximal sizes {sizes:?}")
        })
    })
}

fn criterion_10() -> Outcome {
    let corpus = for_matroid_corpus(|x, h| {
        let table = brute_independence_table(x, h, &L).unwrap();
        let n = x.len();
        ensure(table[0], || "empty set dependent".into())?;
        for m in 0..(1usize << n) {
            if table[m] {
                for i in 0..n {
                    ensure(m >> i & 1 == 0 || table[m & !(1 << i)], || {
                        format!("hereditary fails at mask {m:#b}")
                    })?;
                }
            }
        }
        match brute_exchange_violation(x, h, &L).unwrap() {
            None => Ok(()),
            Some((a, b)) => Err(format!("exchange fails for A = {a:?}, B = {b:?}")),
        }
    })?;
    let seven = GroundSet::interval(7);
    let violation = brute_exchange_violation(&seven, 2, &L).unwrap();
    let (a, b) = violation.ok_or("exchange axiom unexpectedly holds on {1..7}")?;
    let show = |v: &[Element]| v.iter().map(|e| e.value()).collect::<Vec<_>>();
    Ok(format!(
        "{corpus}; on {{1..7}} exchange fails for A = {:?}, B = {:?}",
        show(&a),
        show(&b)
    ))
}

fn criterion_11() -> Outcome {
    let mut partitions_checked = 0;
    let mut coverings_built = 0;
    let summary = for_matroid_corpus(|x, h| {
        let m = SidonMatroid::new(x.clone(), h, true).map_err(|e| e.to_string())?;
        let n = x.len();
        for k in 1..=n {
            let (fast, brute) = (
                m.union_rank(k).unwrap(),
                brute_union_rank(x, h, k, &L).unwrap(),
            );
            ensure(fast == brute, || {
                format!("rho_{k}: augmenting {fast}, exhaustive {brute}")
            })?;
        }
        let cover = m.covering_number(None).unwrap();
        let smallest = (1..=n)
            .find(|&k| brute_union_rank(x, h, k, &L).unwrap() == n)
            .unwrap();
        ensure(cover == smallest, || {
            format!("covering number {cover}, smallest full rank at {smallest}")
        })?;
        let profile = m.rank_profile().unwrap();
        ensure(
            profile.ranks().windows(2).all(|w| w[0] < w[1]) && profile.rho(cover) == n,
            || format!("profile {:?}", profile.ranks()),
        )?;
        for mu in PartitionMu::all(n) {
            let fast = m.mu_covering_exists(&mu).unwrap();
            let brute = brute_mu_partition_exists(x, h, &mu, &L).unwrap();
            ensure(fast == brute, || {
                format!("mu = {mu}: criterion {fast}, exhaustive {brute}")
            })?;
            partitions_checked += 1;
            if let MuCovering::Covering(parts) =
                m.construct_mu_covering(&mu).map_err(|e| e.to_string())?
            {
                let mut all = parts.concat();
                all.sort();
                ensure(all == x.elements(), || {
                    format!("mu = {mu}: parts {parts:?} do not partition X")
                })?;
                for (p, &size) in parts.iter().zip(mu.parts()) {
                    ensure(p.len() == size, || {
                        format!("mu = {mu}: part {p:?} has wrong size")
                    })?;
                    let p = GroundSet::from_elements(x.group(), p.clone()).unwrap();
                    ensure(brute_is_bh(&p, h).unwrap(), || {
                        format!("mu = {mu}: part {p} not B_{h}")
                    })?;
                }
                coverings_built += 1;
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{summary}; {partitions_checked} partitions, {coverings_built} coverings verified"
    ))
}

fn criterion_12() -> Outcome {
    let mut count = 0;
    for h in 1..=4usize {
        for g in (h as i64 + 1)..=6 {
            let terms = powers(g, 6).unwrap();
            for mask in 1u32..(1 << terms.len()) {
                let a = set(&(0..terms.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| terms[i])
                    .collect::<Vec<_>>());
                ensure(is_bh(&a, h, &L).unwrap().is_member(), || {
                    format!("{a} not B_{h} (g = {g})")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} subsets of geometric progressions are B_h"))
}

fn criterion_13() -> Outcome {
    let corpus = random_corpus(0x5eed_0013, 200, 8, 50, false);
    let mut count = 0;
    for a in &corpus {
        for h in 2..=4usize {
            let bh = is_bh(a, h, &L).unwrap().is_member();
            for x in -10..=10 {
                let t = is_bh(&a.translate(x).unwrap(), h, &L).unwrap().is_member();
                let r = is_bh(&a.reflect(x).unwrap(), h, &L).unwrap().is_member();
                ensure(t == bh && r == bh, || {
                    format!("{a}, h = {h}, x = {x}: {bh} {t} {r}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{} sets, {count} shifts, invariant", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("1 maximal Sidon subsets of {1..7}", criterion_1),
        ("2 {1,2,3} generalized membership", criterion_2),
        ("3 {1,14,19,20,25,38}", criterion_3),
        ("4 collapse for k >= h/2", criterion_4),
        ("5 identity suite", criterion_5),
        ("6 extension tower", criterion_6),
        ("7 proper representations have length h", criterion_7),
        ("8 unique proper representation", criterion_8),
        ("9 exchange and equal cardinality", criterion_9),
        ("10 matroid axioms", criterion_10),
        ("11 union rank, covering, mu-coverings", criterion_11),
        ("12 geometric progressions", criterion_12),
        ("13 translation and reflection", criterion_13),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("criterion {name}: PASS ({:.2?}) {msg}", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.2?}) {msg}", start.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        total.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
