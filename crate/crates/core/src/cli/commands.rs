use super::{Command, FnArgs, Run, ShareCommand};
use crate::certapp::{fstar_ledger, maj_amplification};
use crate::dualcraft::bounds::{
    alternating_binomial_identity_holds, binomial_bound_holds, combinatorial_bound_check,
    inverse_square_tail_holds,
};
use crate::dualcraft::pipeline::{inner_profile, ParamOverrides};
use crate::dualcraft::{self, amplifier_psi, dual_block_compose, omega, omega_properties, AmplificationParams, FactoredZeta};
use crate::exactlp::{
    adeg, dual_witness, eps_opt, one_sided_dual_witness, DualWitness, LpCertificate, WitnessFile,
};
use crate::fncore::{self, certificate_complexity, BooleanFunction};
use crate::rational::{self, frac, int, Q};
use crate::reduction::{canonical_dnf, reduction_ledger, ChainConfig};
use crate::report::{Ledger, Property, Rel, RunManifest};
use crate::shareapp::{
    advantage, monte_carlo, reconstruct, scheme_from_witness, secrecy_audit, split, Scheme, ShareBundle,
};
use anyhow::{bail, Context};
use num_traits::{One, Signed, Zero};
use std::path::Path;

pub fn dispatch(cmd: &Command, run: &mut Run) -> anyhow::Result<()> {
    match cmd {
        Command::Adeg { f, eps } => cmd_adeg(run, f, eps),
        Command::Eps { f, d, out } => cmd_eps(run, f, *d, out),
        Command::Dual { f, d, one_sided, out } => cmd_dual(run, f, *d, *one_sided, out),
        Command::Compose { outer, inner, out } => cmd_compose(run, outer, inner, out),
        Command::Omega { k, c, check, out } => cmd_omega(run, *k, *c, *check, out),
        Command::Amplify { f, k, big_d, big_m, big_n, schedule, out } => {
            let o = ParamOverrides { k: *k, big_d: *big_d, big_m: *big_m, n_cap: *big_n };
            cmd_amplify(run, f, o, *schedule, out)
        }
        Command::Reduce { f, big_n, eps, width, out } => cmd_reduce(run, f, *big_n, eps, *width, out),
        Command::Correct { file, big_n, big_d, out } => cmd_correct(run, file, *big_n, *big_d, out),
        Command::Masscheck { big_r, big_n, k, file } => cmd_masscheck(run, *big_r, *big_n, *k, file.as_deref()),
        Command::Share { action } => cmd_share(run, action),
        Command::Cert { f, eps, fstar, maj } => cmd_cert(run, f, eps, *fstar, *maj),
        Command::Report { f, from, out } => cmd_report(run, f, from.as_deref(), out),
    }
}

fn m(run: &mut Run) -> &mut RunManifest {
    &mut run.manifest
}

fn push(run: &mut Run, p: Property) {
    run.manifest.properties.push(p);
}

fn extend(run: &mut Run, l: Ledger) {
    run.manifest.properties.extend(l);
}

fn load_witness(run: &mut Run, path: &Path) -> anyhow::Result<DualWitness> {
    let text = run.read_input(path)?;
    let file: WitnessFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(DualWitness::from_file(&file)?)
}

fn witness_json(w: &DualWitness) -> String {
    serde_json::to_string_pretty(&w.to_file()).expect("witness serializes")
}

fn cmd_adeg(run: &mut Run, fa: &FnArgs, eps: &Q) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    m(run).param("eps", rational::fmt(eps));
    let rep = adeg(&f, eps)?;
    println!("{}", rep.degree);
    if !rep.trivial {
        let top = &rep.ladder[rep.degree].eps;
        push(run, Property::compare("eps_opt_at_degree", top, Rel::Le, eps, true));
        if let Some(below) = rep.below() {
            push(run, Property::compare("eps_opt_below_degree", below, Rel::Gt, eps, true));
            let (corr, _) = dual_witness(&f, rep.degree)?;
            push(run, Property::compare("dual_certifies_lower_bound", &corr, Rel::Eq, below, true));
        }
    }
    m(run).output("degree", rep.degree);
    m(run).output("ladder", &rep.ladder);
    Ok(())
}

fn cmd_eps(run: &mut Run, fa: &FnArgs, d: usize, out: &Option<std::path::PathBuf>) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    m(run).param("d", d);
    let cert = LpCertificate::compute(&f, d)?;
    println!("{}", rational::fmt(&cert.primal_eps));
    push(
        run,
        Property::compare("strong_duality", &cert.primal_eps, Rel::Eq, &cert.dual_correlation, true),
    );
    push(run, Property::check("certificate_verifies", cert.verify(&f)));
    m(run).output("eps_opt", rational::fmt(&cert.primal_eps));
    let text = serde_json::to_string_pretty(&cert)?;
    run.write_output("out", out, &text)
}

fn cmd_dual(
    run: &mut Run,
    fa: &FnArgs,
    d: usize,
    one_sided: bool,
    out: &Option<std::path::PathBuf>,
) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    m(run).param("d", d);
    m(run).param("one_sided", one_sided);
    let (corr, w) = if one_sided { one_sided_dual_witness(&f, d)? } else { dual_witness(&f, d)? };
    println!("{}", rational::fmt(&corr));
    if !w.is_zero() {
        push(run, Property::compare("witness_norm", &w.l1(), Rel::Eq, &Q::one(), true));
        push(run, Property::check("witness_pure_high_degree", w.certify_pure_high_degree(d)));
    }
    let measured = w.correlation(&f).unwrap_or_else(Q::zero);
    push(run, Property::compare("witness_correlation", &measured, Rel::Eq, &corr, true));
    if d > 0 && !one_sided {
        let (e, _) = eps_opt(&f, d - 1)?;
        push(run, Property::compare("strong_duality", &corr, Rel::Eq, &e, true));
    }
    if one_sided {
        let ok = f.preimage(1).all(|x| !w.get(x).is_negative());
        push(run, Property::check("nonnegative_on_false_inputs", ok));
    }
    m(run).output("correlation", rational::fmt(&corr));
    run.write_output("out", out, &witness_json(&w))
}

fn cmd_compose(
    run: &mut Run,
    outer: &Path,
    inner: &Path,
    out: &Option<std::path::PathBuf>,
) -> anyhow::Result<()> {
    let big = load_witness(run, outer)?;
    let small = load_witness(run, inner)?;
    let z = dual_block_compose(&big, &small)?;
    let unit = big.l1().is_one() && small.l1().is_one() && small.total().is_zero();
    let p = Property::compare("composed_norm", &z.l1(), Rel::Eq, &Q::one(), unit);
    push(run, if unit { p } else { p.with_note("inputs are not unit-norm with a balanced inner witness") });
    let (pd, qd) = (big.pure_high_degree(), small.pure_high_degree());
    let zd = z.pure_high_degree();
    push(run, Property::compare_int("composed_pure_high_degree", zd as i64, Rel::Ge, (pd * qd) as i64, true));
    println!("arity {} support {} pure_high_degree {zd}", z.arity(), z.support_size());
    m(run).output("pure_high_degree", zd);
    run.write_output("out", out, &witness_json(&z))
}

fn cmd_omega(run: &mut Run, k: usize, c: usize, check: bool, out: &Option<std::path::PathBuf>) -> anyhow::Result<()> {
    m(run).param("k", k);
    m(run).param("c", c);
    let o = omega(k, c)?;
    println!("support {:?}", o.support_set);
    if check {
        extend(run, omega_properties(&o));
    }
    m(run).output("support_set", &o.support_set);
    m(run).output("raw", &o.raw);
    m(run).output("normalized", &o.normalized);
    let text = serde_json::to_string_pretty(&o.normalized)?;
    run.write_output("out", out, &text)
}

fn cmd_amplify(
    run: &mut Run,
    fa: &FnArgs,
    o: ParamOverrides,
    schedule: bool,
    out: &Option<std::path::PathBuf>,
) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    for (key, v) in [("k", o.k), ("D", o.big_d), ("M", o.big_m), ("N", o.n_cap)] {
        if let Some(v) = v {
            m(run).param(key, v);
        }
    }
    if schedule {
        let d = adeg(&f, &frac(2, 3))?.degree.max(1);
        let p = AmplificationParams::schedule(f.arity(), d)?.with_overrides(&o);
        println!("{}", serde_json::to_string(&p)?);
        m(run).output("params", &p);
        return Ok(());
    }
    let desk = dualcraft::pipeline::run_desk(&f, &o)?;
    println!("{}", serde_json::to_string(&desk.params)?);
    extend(run, desk.ledger.clone());
    m(run).output("params", &desk.params);
    m(run).output("mass_outside", rational::fmt(&desk.mass_outside));
    run.write_output("out", out, &witness_json(&desk.zetahat))
}

fn cmd_reduce(
    run: &mut Run,
    fa: &FnArgs,
    n_len: usize,
    eps: &Q,
    width: Option<usize>,
    out: &Option<std::path::PathBuf>,
) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    m(run).param("N", n_len);
    m(run).param("eps", rational::fmt(eps));
    let mut cfg = ChainConfig::new(n_len, eps.clone());
    cfg.width = width;
    cfg.table_cap = cfg.table_cap.min(run.brute_cap);
    if let Some(w) = width {
        m(run).param("width", w);
    }
    let (ledger, summary) = reduction_ledger(&f, &cfg)?;
    extend(run, ledger);
    println!("{}", serde_json::to_string(&summary)?);
    m(run).output("summary", &summary);
    let text = serde_json::to_string_pretty(&summary)?;
    run.write_output("out", out, &text)
}

fn cmd_correct(
    run: &mut Run,
    file: &Path,
    cap: usize,
    degree: usize,
    out: &Option<std::path::PathBuf>,
) -> anyhow::Result<()> {
    let zeta = load_witness(run, file)?;
    m(run).param("N", cap);
    m(run).param("D", degree);
    let nu = dualcraft::correction_nu(&zeta, cap, degree)?;
    let zetahat = dualcraft::finalize_zetahat(&zeta, &nu)?;
    extend(run, dualcraft::correction::correction_properties(&zeta, &nu, cap, degree));
    push(run, Property::compare("zetahat_norm", &zetahat.l1(), Rel::Eq, &Q::one(), true));
    let top = zetahat.max_support_weight().unwrap_or(0);
    push(run, Property::compare_int("zetahat_support_within_cap", top as i64, Rel::Le, cap as i64, true));
    push(run, Property::check("zetahat_pure_high_degree", zetahat.certify_pure_high_degree(degree)));
    println!("nu_norm {}", rational::fmt(&nu.l1()));
    m(run).output("nu_norm", rational::fmt(&nu.l1()));
    run.write_output("out", out, &witness_json(&zetahat))
}

fn cmd_masscheck(run: &mut Run, r: usize, cap: usize, k: Option<usize>, file: Option<&Path>) -> anyhow::Result<()> {
    let k = k.unwrap_or(cap);
    m(run).param("R", r);
    m(run).param("N", cap);
    m(run).param("k", k);
    let outer = match file {
        Some(p) => load_witness(run, p)?,
        None => amplifier_psi(r)?,
    };
    if outer.arity() != r {
        bail!("outer witness has arity {}, expected R = {r}", outer.arity());
    }
    let profile = inner_profile(k)?;
    let z = FactoredZeta::new(outer, profile.clone(), cap)?;
    let dp = z.mass_outside(cap);
    println!("{}", rational::fmt(&dp));
    m(run).output("mass_outside", rational::fmt(&dp));
    if r * cap <= run.brute_cap {
        let brute = z.mass_outside_brute(cap)?;
        push(run, Property::compare("mass_outside_dp_matches_enumeration", &dp, Rel::Eq, &brute, true));
    }
    let (plus, minus) = profile.split();
    for neg in 0..=r {
        let etas: Vec<Vec<Q>> =
            (0..r).map(|i| if i < neg { minus.clone() } else { plus.clone() }).collect();
        let name = format!("tail_bound_{neg}_negative_blocks");
        match combinatorial_bound_check(k, &etas, cap) {
            Ok(b) => push(
                run,
                Property::decided(
                    name,
                    b.holds,
                    false,
                    rational::fmt(&b.lhs),
                    Rel::Le,
                    b.rhs_expression.clone(),
                )
                .with_note(format!("rhs ~ {:e} (approximate)", b.rhs_approx)),
            ),
            Err(e) => push(run, Property::check(name, false).with_note(e.to_string())),
        }
    }
    push(run, Property::check("binomial_bound_up_to_40", binomial_bound_holds(40)));
    push(run, Property::check("inverse_square_tail_up_to_200", inverse_square_tail_holds(200, 200)));
    push(run, Property::check("alternating_binomial_identity_up_to_20", alternating_binomial_identity_holds(20)));
    Ok(())
}

fn cmd_share(run: &mut Run, action: &ShareCommand) -> anyhow::Result<()> {
    match action {
        ShareCommand::Make { f: fa, witness, d, out } => {
            let f = run.load_fn(fa)?;
            let (name, psi) = match witness {
                Some(p) => (p.display().to_string(), load_witness(run, p)?),
                None => {
                    let d = match d {
                        Some(d) => *d,
                        None => adeg(&f, &Q::zero())?.degree,
                    };
                    m(run).param("d", d);
                    (format!("lp-dual-d{d}"), dual_witness(&f, d)?.1)
                }
            };
            let fname = match (&fa.name, &fa.file) {
                (Some(k), _) => format!("{k:?}{}", fa.n.unwrap_or(0)).to_lowercase(),
                (_, Some(p)) => p.display().to_string(),
                _ => "f".into(),
            };
            let scheme = scheme_from_witness(&fname, &name, &psi)?;
            let adv = advantage(&scheme, &f);
            let corr = psi.correlation(&f).context("witness arity differs from the function")?;
            push(run, Property::compare("advantage_equals_correlation", &adv, Rel::Eq, &corr, true));
            println!("advantage {}", rational::fmt(&adv));
            m(run).output("advantage", rational::fmt(&adv));
            m(run).output("pure_high_degree", psi.pure_high_degree());
            run.write_output("out", out, &scheme.to_json())
        }
        ShareCommand::Split { scheme, secret, seed, out } => {
            let s = Scheme::from_json(&run.read_input(scheme)?)?;
            m(run).param("secret", secret);
            m(run).param("seed", seed);
            let b = split(*secret, &s, *seed);
            println!("{}", b.shares);
            m(run).output("shares", &b.shares);
            let text = serde_json::to_string_pretty(&b)?;
            run.write_output("out", out, &text)
        }
        ShareCommand::Reconstruct { bundle, f: fa } => {
            let b: ShareBundle = serde_json::from_str(&run.read_input(bundle)?)?;
            let f = run.load_fn(fa)?;
            let v = reconstruct(&b, &f)?;
            println!("{v}");
            m(run).output("reconstructed", v);
            Ok(())
        }
        ShareCommand::Audit { scheme, d } => {
            let s = Scheme::from_json(&run.read_input(scheme)?)?;
            m(run).param("d", d);
            let rep = secrecy_audit(&s, *d);
            println!("{}", if rep.pass { "pass" } else { "fail" });
            let mut p = Property::check("secrecy_below_d", rep.pass);
            if let Some(fail) = &rep.failure {
                p = p.with_note(format!("marginals differ on coordinates {:?}", fail.subset));
            }
            push(run, p);
            m(run).output("audit", &rep);
            Ok(())
        }
        ShareCommand::Advantage { scheme, f: fa, trials, seed } => {
            let s = Scheme::from_json(&run.read_input(scheme)?)?;
            let f = run.load_fn(fa)?;
            let adv = advantage(&s, &f);
            let psi = DualWitness::from_entries(
                s.n,
                s.plus
                    .iter()
                    .map(|(x, p)| (*x, p / int(2)))
                    .chain(s.minus.iter().map(|(x, p)| (*x, -(p / int(2))))),
            );
            let corr = psi.correlation(&f).context("scheme arity differs from the function")?;
            push(run, Property::compare("advantage_equals_correlation", &adv, Rel::Eq, &corr, true));
            println!("advantage {}", rational::fmt(&adv));
            m(run).output("advantage", rational::fmt(&adv));
            if *trials > 0 {
                m(run).param("trials", trials);
                m(run).param("seed", seed);
                let hits = monte_carlo(&s, &f, *trials, *seed);
                let p = (Q::one() + &adv) / int(2);
                let expected = &p * Q::from_integer((*trials).into());
                let var = &expected * (Q::one() - &p);
                // |hits − expected| ≤ 3σ  ⇔  (hits − expected)² ≤ 9·var.
                let dev = Q::from_integer(hits.into()) - &expected;
                push(
                    run,
                    Property::compare("monte_carlo_within_3_sigma", &(&dev * &dev), Rel::Le, &(var * int(9)), false),
                );
                println!("monte_carlo {hits}/{trials}");
                m(run).output("monte_carlo_successes", hits);
            }
            Ok(())
        }
    }
}

fn fstar_dnf(fa: &FnArgs, f: &BooleanFunction) -> anyhow::Result<fncore::Dnf> {
    if let Some(p) = &fa.file {
        if let Ok(d) = fncore::io::dnf_from_json(&std::fs::read_to_string(p)?) {
            return Ok(d);
        }
    }
    Ok(canonical_dnf(f))
}

fn cmd_cert(run: &mut Run, fa: &FnArgs, eps: &Q, fstar: bool, maj: Option<usize>) -> anyhow::Result<()> {
    let f = run.load_fn(fa)?;
    m(run).param("eps", rational::fmt(eps));
    if f.is_total() && f.arity() <= run.brute_cap {
        let rep = certificate_complexity(&f, run.brute_cap)?;
        println!("C {} C-1 {} C+1 {}", rep.c, rep.c_minus, rep.c_plus);
        push(
            run,
            Property::compare_int("certificate_is_max_of_sides", rep.c as i64, Rel::Eq, rep.c_minus.max(rep.c_plus) as i64, true),
        );
        m(run).output("C", rep.c);
        m(run).output("C_minus", rep.c_minus);
        m(run).output("C_plus", rep.c_plus);
    }
    if fstar {
        let dnf = fstar_dnf(fa, &f)?;
        let (l, base, lifted) = fstar_ledger(&dnf, eps)?;
        extend(run, l);
        println!("adeg(f) {} adeg(f*) {}", base.degree, lifted.degree);
        m(run).output("adeg_f", base.degree);
        m(run).output("adeg_fstar", lifted.degree);
    }
    if let Some(mp) = maj {
        m(run).param("maj", mp);
        let (l, base, amp) = maj_amplification(&f, mp)?;
        extend(run, l);
        println!("adeg_1/3(f) {} adeg_eps(MAJ o f) {}", base.degree, amp.degree);
        m(run).output("maj_eps", rational::fmt(&amp.target));
        m(run).output("adeg_maj_composed", amp.degree);
    }
    Ok(())
}

fn cmd_report(run: &mut Run, fa: &FnArgs, from: Option<&Path>, out: &Option<std::path::PathBuf>) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(path) = from {
        let text = run.read_input(path)?;
        let manifest: RunManifest = serde_json::from_str(&text)?;
        w.write_record(["command", "property", "status", "lhs", "relation", "rhs", "note"])?;
        for p in manifest.properties.iter() {
            let status = serde_json::to_value(p.status)?;
            w.write_record([
                manifest.command.as_str(),
                &p.name,
                status.as_str().unwrap_or_default(),
                p.lhs.as_deref().unwrap_or(""),
                p.relation.as_deref().unwrap_or(""),
                p.rhs.as_deref().unwrap_or(""),
                p.note.as_deref().unwrap_or(""),
            ])?;
        }
    } else {
        let f = run.load_fn(fa)?;
        w.write_record(["degree", "eps_opt", "dual_correlation", "eps_opt_approx"])?;
        for d in 0..=f.arity() {
            let (e, _) = eps_opt(&f, d)?;
            let (c, _) = dual_witness(&f, d + 1)?;
            push(run, Property::compare(format!("strong_duality_d{d}"), &e, Rel::Eq, &c, true));
            w.write_record([
                d.to_string(),
                rational::fmt(&e),
                rational::fmt(&c),
                format!("~{:.6}", rational::approx(&e)),
            ])?;
        }
    }
    let text = String::from_utf8(w.into_inner()?)?;
    match out {
        Some(_) => run.write_output("out", out, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}
