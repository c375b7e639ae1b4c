//! End-to-end acceptance run over the built-in corpus. Prints one line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfkern::central::{central_data, enumerate_lattice, theorem_harness, TheoremReport};
use hopfkern::corpus::{builtins, Builtin, GroupTable};
use hopfkern::hopf::{dual, integral, quotient_by_ideal, verify_hopf, HopfAlgebraData};
use hopfkern::kernels::{acts_trivially, hopf_ideal_im, hopf_kernel, ker_set, kernel_subalgebra, verify_2_10, KernelReport};
use hopfkern::rep::{
    char_ops, char_power, induced_trivial_character, rep_from_block, CharOp, Character, CharacterData, PhiMap,
};
use hopfkern::{FieldElem, Rational};

const AXIOM_LIMIT: Duration = Duration::from_secs(30);
const CORPUS_LIMIT: Duration = Duration::from_secs(300);
const HKER_LIMIT: Duration = Duration::from_secs(60);

struct Entry {
    builtin: Builtin,
    data: CharacterData,
    kernels: Vec<KernelReport>,
    theorems: TheoremReport,
}

struct Corpus {
    entries: Vec<Entry>,
    elapsed: Duration,
}

impl Corpus {
    fn run() -> Corpus {
        let start = Instant::now();
        let entries = builtins()
            .into_iter()
            .map(|builtin| {
                let h = builtin.build().expect("builtin builds");
                verify_hopf(&h).into_result().expect("builtin is a Hopf algebra");
                let data = CharacterData::new(Arc::new(h)).expect("characters");
                let kernels = (0..data.irr.len())
                    .map(|i| verify_2_10(&data, i).expect("kernel report"))
                    .collect();
                let theorems = theorem_harness(&data).expect("theorem harness");
                Entry { builtin, data, kernels, theorems }
            })
            .collect();
        Corpus {
            entries,
            elapsed: start.elapsed(),
        }
    }

    fn get(&self, name: &str) -> &Entry {
        self.entries.iter().find(|e| e.builtin.name == name).expect("known builtin")
    }

    fn groups(&self) -> impl Iterator<Item = (&Entry, GroupTable)> {
        self.entries
            .iter()
            .filter_map(|e| group_table(e.builtin.name).map(|t| (e, t)))
    }
}

fn group_table(name: &str) -> Option<GroupTable> {
    Some(match name {
        "C2" => GroupTable::cyclic(2),
        "C4" => GroupTable::cyclic(4),
        "C2xC2" => GroupTable::klein_four(),
        "S3" => GroupTable::symmetric3(),
        "D4" => GroupTable::dihedral4(),
        "Q8" => GroupTable::quaternion(),
        "A4" => GroupTable::alternating4(),
        _ => return None,
    })
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn scaled(v: &[FieldElem], s: &FieldElem) -> Vec<FieldElem> {
    v.iter().map(|x| x * s).collect()
}

fn chi_one(h: &HopfAlgebraData, chi: &Character) -> FieldElem {
    chi.eval(h.unit())
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for b in builtins() {
        let h = b.build().expect("builtin builds");
        for alg in [dual(&h), h] {
            let r = verify_hopf(&alg);
            count += 1;
            if !r.is_hopf() || !r.antipode_involutive || integral(&alg).is_err() {
                failures.push(alg.name().to_string());
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < AXIOM_LIMIT,
        format!("{count} algebras, failures {failures:?}, {:.2}s (limit 30s)", elapsed.as_secs_f64()),
    )
}

fn integral_expansion(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    for e in &c.entries {
        let h = &e.data.algebra;
        let f = h.field();
        let lambda = integral(h).expect("integral");
        let lhs = scaled(&lambda, &f.from_int(h.dim() as i64));
        let mut rhs = h.zero_vec();
        for d in 0..e.data.coirr.len() {
            let eps = f.from_int(e.data.codegree(d) as i64);
            for (r, x) in rhs.iter_mut().zip(e.data.coelement(d)) {
                r.add_mul(&eps, x);
            }
        }
        if lhs != rhs {
            bad.push(e.builtin.name);
        }
    }
    outcome(bad.is_empty(), format!("{} algebras, mismatches {bad:?}", c.entries.len()))
}

fn value_condition_matches_action(c: &Corpus) -> Outcome {
    let mut pairs = 0;
    let mut s3_pairs = 0;
    let mut bad = Vec::new();
    for e in &c.entries {
        let h = &e.data.algebra;
        let f = h.field();
        for (i, chi) in e.data.irr.characters().enumerate() {
            let module = rep_from_block(h, &e.data.irr, i).expect("block module");
            let one = chi_one(h, chi);
            for d in 0..e.data.coirr.len() {
                let x = e.data.coelement(d);
                let by_value = chi.eval(x) == &f.from_int(e.data.codegree(d) as i64) * &one;
                let by_action = acts_trivially(h, &module, x);
                pairs += 1;
                if e.builtin.name == "S3" {
                    s3_pairs += 1;
                }
                if by_value != by_action {
                    bad.push((e.builtin.name, i, d));
                }
            }
        }
    }
    outcome(
        bad.is_empty() && s3_pairs == 18,
        format!("{pairs} pairs ({s3_pairs} for S3), disagreements {bad:?}"),
    )
}

fn kernels_coincide(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for e in &c.entries {
        for r in &e.kernels {
            count += 1;
            let ok = r.kernels_equal
                && r.hker_space == r.kernel_space
                && r.sm_oracle_equal
                && r.sm_oracle_is_hopf
                && r.module_b_equal;
            if !ok {
                bad.push((e.builtin.name, r.character));
            }
        }
    }
    // the sign character of S3 has kernel A3 = {g : g^3 = 1}
    let s3 = c.get("S3");
    let t = GroupTable::symmetric3();
    let h = &s3.data.algebra;
    let sign = s3
        .data
        .irr
        .characters()
        .position(|chi| chi_one(h, chi).is_one() && chi.values.iter().any(|v| v.as_integer() == Some(-1)))
        .expect("sign character");
    let a3: Vec<Vec<FieldElem>> = (0..6).filter(|&g| t.element_order(g) != 2).map(|g| h.basis_vec(g)).collect();
    let a3 = hopfkern::Subspace::from_vectors(h.field(), 6, a3);
    let sign_report = &s3.kernels[sign];
    let sign_ok = sign_report.kernel_dim == 3 && sign_report.kernel_space == a3;
    outcome(
        bad.is_empty() && sign_ok,
        format!("{count} characters, failures {bad:?}; S3 sign kernel dim {} equals A3: {sign_ok}", sign_report.kernel_dim),
    )
}

/// Characters of a group computed modulo a prime from class multiplication coefficients alone,
/// and their kernels read off from eigenvalue multiplicities.
mod modular_oracle {
    use super::GroupTable;

    pub const P: u64 = 13;

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= P;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    /// `(degree, kernel)` for every irreducible character.
    pub fn kernels(t: &GroupTable) -> Vec<(u32, Vec<usize>)> {
        let n = t.order();
        assert!(12 % t.exponent() == 0 && !(n as u64).is_multiple_of(P));
        let classes = t.conjugacy_classes();
        let k = classes.len();
        let mut class_of = vec![0; n];
        for (i, cl) in classes.iter().enumerate() {
            for &g in cl {
                class_of[g] = i;
            }
        }
        let mut coeff = vec![0u64; k * k * k];
        for (kk, cl) in classes.iter().enumerate() {
            let z = cl[0];
            for x in 0..n {
                let y = t.mul(t.inv(x), z);
                coeff[(class_of[x] * k + class_of[y]) * k + kk] += 1;
            }
        }
        let id_class = class_of[0];
        let mut solutions = Vec::new();
        let free: Vec<usize> = (0..k).filter(|&i| i != id_class).collect();
        let total = (P as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut w = vec![1u64; k];
            let mut c = code;
            for &i in &free {
                w[i] = (c % P as usize) as u64;
                c /= P as usize;
            }
            let ok = (0..k).all(|i| {
                (0..k).all(|j| {
                    let rhs: u64 = (0..k).map(|kk| coeff[(i * k + j) * k + kk] % P * w[kk]).sum::<u64>() % P;
                    w[i] * w[j] % P == rhs
                })
            });
            if ok {
                solutions.push(w);
            }
        }
        assert_eq!(solutions.len(), k, "{}: central characters", t.name());
        solutions
            .iter()
            .map(|w| {
                let norm: u64 = (0..k)
                    .map(|i| {
                        let inv_class = class_of[t.inv(classes[i][0])];
                        w[i] * w[inv_class] % P * inv(classes[i].len() as u64) % P
                    })
                    .sum::<u64>()
                    % P;
                let deg_sq = n as u64 % P * inv(norm) % P;
                let deg = (1..=P / 2).find(|d| d * d % P == deg_sq).expect("degree");
                let value = |g: usize| deg * w[class_of[g]] % P * inv(classes[class_of[g]].len() as u64) % P;
                let kernel = (0..n)
                    .filter(|&g| {
                        let ord = t.element_order(g);
                        let mut x = 0;
                        let mut sum = 0;
                        for _ in 0..ord {
                            sum = (sum + value(x)) % P;
                            x = t.mul(x, g);
                        }
                        sum * inv(ord as u64) % P == deg
                    })
                    .collect();
                (deg as u32, kernel)
            })
            .collect()
    }
}

fn group_oracle(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (e, t) in c.groups() {
        // Irr(H*) of CG is G itself; find the group element behind each index
        let element_of: Vec<usize> = (0..e.data.coirr.len())
            .map(|d| {
                let x = e.data.coelement(d);
                let g = x.iter().position(|v| !v.is_zero()).expect("nonzero");
                assert!(x[g].is_one() && x.iter().filter(|v| !v.is_zero()).count() == 1);
                g
            })
            .collect();
        let mut ours: Vec<(u32, Vec<usize>)> = e
            .data
            .irr
            .characters()
            .enumerate()
            .map(|(i, chi)| {
                let mut set: Vec<usize> = ker_set(&e.data, chi).into_iter().map(|d| element_of[d]).collect();
                set.sort_unstable();
                (e.data.irr.blocks[i].degree, set)
            })
            .collect();
        let mut oracle = modular_oracle::kernels(&t);
        ours.sort();
        oracle.sort();
        count += ours.len();
        if ours != oracle {
            bad.push(e.builtin.name);
        }
    }
    outcome(
        bad.is_empty() && count > 0,
        format!("{count} characters over 7 groups against a mod-{} character oracle, mismatches {bad:?}", modular_oracle::P),
    )
}

fn phi_identities(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    for e in &c.entries {
        let h = &e.data.algebra;
        let f = h.field();
        let phi = PhiMap::new(h).expect("phi");
        let n = h.dim() as i64;
        let first = (0..e.data.coirr.len()).all(|d| {
            let s = f.from_rational(Rational::new((e.data.codegree(d) as i64).into(), n.into()));
            phi.apply(e.data.coirr.idempotent(d)) == scaled(&h.apply_antipode(e.data.coelement(d)), &s)
        });
        let second = e.data.irr.blocks.iter().all(|b| {
            phi.apply_inverse(&b.idempotent) == scaled(&b.character.values, &f.from_int(b.degree as i64))
        });
        if !(first && second) {
            bad.push(e.builtin.name);
        }
    }
    outcome(bad.is_empty(), format!("{} algebras, failures {bad:?}", c.entries.len()))
}

fn partitions(c: &Corpus) -> Outcome {
    let s3 = c.get("S3");
    let central = central_data(&s3.data).expect("central data");
    let s3_ok = central.partition_y == GroupTable::symmetric3().conjugacy_classes()
        && central.partition_y.len() == 3
        && central.partition_x == vec![vec![0], vec![1], vec![2]];
    let mut bad = Vec::new();
    for e in &c.entries {
        let cd = central_data(&e.data).expect("central data");
        if cd.partition_x.len() != cd.partition_y.len() || !cd.e_hat_formulas_agree {
            bad.push(e.builtin.name);
        }
    }
    outcome(
        s3_ok && bad.is_empty(),
        format!("S3 classes {:?}, singletons: {s3_ok}; |I| = |J| and both e_hat formulas agree except {bad:?}", central.partition_y),
    )
}

fn induced_trivial(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    let mut s3_dims = Vec::new();
    for e in &c.entries {
        let h = &e.data.algebra;
        let lattice = enumerate_lattice(&e.data).expect("lattice");
        let z_hat_dual = central_data(&e.data).expect("central data").z_hat_dual;
        for (_, k) in lattice.normal_members() {
            total += 1;
            if e.builtin.name == "S3" {
                s3_dims.push(k.dim());
            }
            let chi = induced_trivial_character(h, k);
            let kernel = kernel_subalgebra(&e.data, &chi).expect("kernel");
            if kernel.space != k.space || !z_hat_dual.contains(&chi.values) {
                bad.push((e.builtin.name, k.dim()));
            }
        }
    }
    outcome(
        bad.is_empty() && s3_dims == vec![1, 3, 6],
        format!("{total} normal Hopf subalgebras, S3 dims {s3_dims:?}, failures {bad:?}"),
    )
}

fn property_n_duality(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut h8 = None;
    for e in &c.entries {
        let r = &e.theorems;
        let group_like = e.builtin.name != "H8";
        let ok = r.property_n.holds == r.dual_property_n.holds
            && (!group_like || (r.property_n.holds && r.dual_property_n.holds))
            && r.finding("dual_property_n_iff_equal_kernels_on_classes").is_some_and(|f| f.passed)
            && r.finding("normal_closure_constant_on_classes").is_some_and(|f| f.passed);
        if e.builtin.name == "H8" {
            h8 = Some(r.property_n.holds);
        }
        if !ok {
            bad.push(e.builtin.name);
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} algebras, H8 has property (N): {h8:?}, failures {bad:?}", c.entries.len()),
    )
}

fn quotient_characters(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut applicable = 0;
    for e in &c.entries {
        if !e.theorems.property_n.holds {
            continue;
        }
        applicable += 1;
        if !e.theorems.finding("quotient_characters_are_kernels").is_some_and(|f| f.passed) {
            bad.push(e.builtin.name);
        }
    }
    outcome(bad.is_empty() && applicable > 0, format!("{applicable} algebras with property (N), failures {bad:?}"))
}

fn kernel_laws(c: &Corpus) -> Outcome {
    let mut bad = BTreeSet::new();
    for e in &c.entries {
        let data = &e.data;
        let h = &data.algebra;
        let chars: Vec<&Character> = data.irr.characters().collect();
        for chi in &chars {
            let ker: BTreeSet<usize> = ker_set(data, chi).into_iter().collect();
            let square: BTreeSet<usize> = ker_set(data, &char_power(h, chi, 2)).into_iter().collect();
            if !ker.is_subset(&square) {
                bad.insert((e.builtin.name, "square"));
            }
            let mut meet: BTreeSet<usize> = (0..data.coirr.len()).collect();
            for n in 1..=h.dim() as u32 {
                let kn: BTreeSet<usize> = ker_set(data, &char_power(h, chi, n)).into_iter().collect();
                meet = meet.intersection(&kn).copied().collect();
            }
            if meet != ker {
                bad.insert((e.builtin.name, "powers"));
            }
            for d in 0..data.coirr.len() {
                let x = data.coelement(d);
                if chi.eval(&h.apply_antipode(x)) != chi.eval(x).conj() {
                    bad.insert((e.builtin.name, "conjugate"));
                }
            }
        }
        for (i, a) in chars.iter().enumerate() {
            for b in &chars[i..] {
                let twice_a = char_ops(h, a, a, CharOp::Sum);
                let sum = char_ops(h, &twice_a, b, CharOp::Sum);
                let got: BTreeSet<usize> = ker_set(data, &sum).into_iter().collect();
                let ka: BTreeSet<usize> = ker_set(data, a).into_iter().collect();
                let kb: BTreeSet<usize> = ker_set(data, b).into_iter().collect();
                if got != ka.intersection(&kb).copied().collect() {
                    bad.insert((e.builtin.name, "sum"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{} algebras, failures {bad:?}", c.entries.len()))
}

fn performance(c: &Corpus) -> Outcome {
    let a4 = c.get("A4");
    let h = &a4.data.algebra;
    let start = Instant::now();
    let mut widest = 0;
    for i in 0..a4.data.irr.len() {
        let module = rep_from_block(h, &a4.data.irr, i).expect("module");
        let im = hopf_ideal_im(h, &module).expect("I_M");
        let q = quotient_by_ideal(h, &im).expect("quotient");
        widest = widest.max(h.dim() * q.quotient.dim() * h.dim());
        let k = hopf_kernel(&q.morphism());
        assert_eq!(k.space, a4.kernels[i].kernel_space);
    }
    let hker = start.elapsed();
    outcome(
        c.elapsed < CORPUS_LIMIT && hker < HKER_LIMIT && widest == 1728,
        format!(
            "corpus {:.2}s (limit 300s); dim-12 HKer systems up to {widest} columns in {:.2}s (limit 60s)",
            c.elapsed.as_secs_f64(),
            hker.as_secs_f64()
        ),
    )
}

fn main() -> ExitCode {
    let axioms = axioms();
    let corpus = Corpus::run();
    let results = [
        ("axioms, antipode squared and integrals", axioms),
        ("regular element from cocharacters", integral_expansion(&corpus)),
        ("value condition matches trivial action", value_condition_matches_action(&corpus)),
        ("character kernel equals Hopf kernel", kernels_coincide(&corpus)),
        ("group algebra kernels against oracle", group_oracle(&corpus)),
        ("phi on central idempotents", phi_identities(&corpus)),
        ("partitions of Irr(H) and Irr(H*)", partitions(&corpus)),
        ("kernels of induced trivial characters", induced_trivial(&corpus)),
        ("property (N) self-duality", property_n_duality(&corpus)),
        ("cocharacter kernels as quotient characters", quotient_characters(&corpus)),
        ("character kernel laws", kernel_laws(&corpus)),
        ("performance envelope", performance(&corpus)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("criterion {:>2} {:<44} {}  {}", i + 1, name, if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
