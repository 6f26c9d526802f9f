use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use orbit_goldie::cells::{self, CellKind};
use orbit_goldie::characters::{
    parabolic_verma_image_character, simple_character, verma_character, BlockSetup, Dimension, GroupFactors,
};
use orbit_goldie::coxeter::WeylGroup;
use orbit_goldie::goldie::{self, TripleData};
use orbit_goldie::kl::{self, DecompositionRow, KlTable};
use orbit_goldie::matrixlie::{centralizer_grading, LeviOrbit};
use orbit_goldie::oracle;
use orbit_goldie::orbits::{self, GroupForm, LeviDescriptor, OrbitLabel};
use orbit_goldie::partitions::{self, Family, LieType, Partition};
use orbit_goldie::{Rational, RationalCharacter, Weight};

use crate::args::*;
use crate::expr;
use crate::output::{Failure, Outcome, Record};

pub struct Context {
    pub truncate: Option<i64>,
}

pub fn dispatch(cmd: &Command, ctx: &Context) -> Outcome {
    match cmd {
        Command::Partition(c) => partition(c),
        Command::Orbit(c) => orbit(c),
        Command::Weyl(c) => weyl(c),
        Command::Kl(c) => kl_cmd(c),
        Command::Cells(c) => cells_cmd(c),
        Command::Char(c) => character(c, ctx),
        Command::Goldie(c) => goldie_cmd(c),
        Command::Oracle(c) => oracle_cmd(c),
    }
}

fn lie_type(s: &str) -> Result<LieType, Failure> {
    Ok(s.parse()?)
}

fn family(s: &str) -> Result<Family, Failure> {
    let c = s.trim().chars().next().ok_or_else(|| Failure::usage("missing family"))?;
    Ok(Family::from_letter(c)?)
}

fn partition_arg(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse()?)
}

fn label(s: &str) -> Result<OrbitLabel, Failure> {
    Ok(s.parse()?)
}

fn group(ty: &str) -> Result<(LieType, Arc<WeylGroup>), Failure> {
    let t = lie_type(ty)?;
    Ok((t, WeylGroup::get(t)?))
}

fn element(g: &WeylGroup, s: &str) -> Result<u32, Failure> {
    Ok(g.parse_element(s)?)
}

fn form(s: &str) -> Result<GroupForm, Failure> {
    Ok(s.parse()?)
}

fn rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse().map_err(|_| Failure::usage(format!("bad rational {s:?}")))
}

fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn partition(c: &PartitionCmd) -> Outcome {
    Ok(vec![match c {
        PartitionCmd::Transpose { partition } => {
            let p = partition_arg(partition)?;
            let t = p.transpose();
            Record::object(t.to_string(), &t)
        }
        PartitionCmd::Collapse { family: f, partition } => {
            let p = partition_arg(partition)?;
            let ty = LieType::from_natural_dim(family(f)?, p.size())?;
            let c = partitions::collapse(&p, ty)?;
            Record::object(c.to_string(), &c)
        }
        PartitionCmd::Dominance { p, q } => {
            let (p, q) = (partition_arg(p)?, partition_arg(q)?);
            let (le, ge) = (partitions::dominance_leq(&p, &q)?, partitions::dominance_leq(&q, &p)?);
            let rel = match (le, ge) {
                (true, true) => "equal",
                (true, false) => "leq",
                (false, true) => "geq",
                (false, false) => "incomparable",
            };
            Record::value(rel, json!({ "p": parts_json(&p), "q": parts_json(&q) }))
        }
        PartitionCmd::Special { label: l } => {
            let (ty, p) = l.split_once(':').ok_or_else(|| Failure::usage(format!("expected TYPE:PARTITION, got {l:?}")))?;
            let (ty, p) = (lie_type(ty)?, partition_arg(p)?);
            Record::value(partitions::is_special(&p, ty)?, json!({ "type": ty, "partition": parts_json(&p) }))
        }
    }])
}

/// Orbit label with its derived invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub label: OrbitLabel,
    pub text: String,
    pub dimension: u64,
    pub special: bool,
    pub even: bool,
    pub weakly_rigid_pattern: bool,
    pub dual: Option<OrbitLabel>,
    pub component_group_full: Option<u64>,
    pub component_group_adjoint: Option<u64>,
}

fn orbit_info(o: &OrbitLabel) -> OrbitInfo {
    OrbitInfo {
        label: o.clone(),
        text: o.to_string(),
        dimension: orbits::orbit_dimension(o),
        special: o.is_special(),
        even: orbits::is_even_orbit(o),
        weakly_rigid_pattern: orbits::is_weakly_rigid_pattern(o).unwrap_or(false),
        dual: orbits::bvs_dual(o).ok(),
        component_group_full: orbits::component_group_order(o, GroupForm::Full).ok(),
        component_group_adjoint: orbits::component_group_order(o, GroupForm::Adjoint).ok(),
    }
}

fn orbit(c: &OrbitCmd) -> Outcome {
    let with_label = |o: &OrbitLabel| json!({ "label": o.to_string() });
    Ok(vec![match c {
        OrbitCmd::Dim { label: l } => {
            let o = label(l)?;
            Record::value(orbits::orbit_dimension(&o), with_label(&o))
        }
        OrbitCmd::Induce { ty, levi, seed } => {
            let t = lie_type(ty)?;
            let levi = LeviDescriptor::parse(t.family(), levi)?;
            let seed = match seed {
                Some(s) => partition_arg(s)?,
                None => Partition::column(levi.residual_natural_dim()),
            };
            let o = orbits::ls_induce(t, &levi, &seed)?;
            Record::object(o.to_string(), &o)
        }
        OrbitCmd::Dual { label: l } => {
            let o = orbits::bvs_dual(&label(l)?)?;
            Record::object(o.to_string(), &o)
        }
        OrbitCmd::Rigid { label: l } => {
            let o = label(l)?;
            Record::value(orbits::is_weakly_rigid_pattern(&o)?, with_label(&o))
        }
        OrbitCmd::ComponentGroup { label: l, form: f } => {
            let o = label(l)?;
            Record::value(orbits::component_group_order(&o, form(f)?)?, with_label(&o))
        }
        OrbitCmd::Abv { label: l } => {
            let w = orbits::abv_weight(&label(l)?)?;
            Record::object(w.to_string(), &w)
        }
        OrbitCmd::Even { label: l } => {
            let o = label(l)?;
            Record::value(orbits::is_even_orbit(&o), with_label(&o))
        }
        OrbitCmd::Info { label: l } => {
            let info = orbit_info(&label(l)?);
            let dual = info.dual.as_ref().map_or("-".to_string(), OrbitLabel::to_string);
            let text = format!(
                "{} dim={} special={} even={} dual={}",
                info.text, info.dimension, info.special, info.even, dual
            );
            Record::object(text, &info)
        }
    }])
}

fn weyl(c: &WeylCmd) -> Outcome {
    match c {
        WeylCmd::Length { ty, w } => {
            let (_, g) = group(ty)?;
            let w = element(&g, w)?;
            Ok(vec![Record::value(g.length(w), json!({ "w": g.element(w) }))])
        }
        WeylCmd::Bruhat { ty, x, w } => {
            let (_, g) = group(ty)?;
            let (x, w) = (element(&g, x)?, element(&g, w)?);
            Ok(vec![Record::value(g.bruhat_leq(x, w), json!({ "x": g.element(x), "w": g.element(w) }))])
        }
        WeylCmd::Cosets { ty, j } => {
            let (_, g) = group(ty)?;
            let reps = g.coset_min_reps(&expr::parse_generators(j)?)?;
            Ok(reps
                .into_iter()
                .map(|u| {
                    let word = g.format_word(u);
                    let e = g.element(u);
                    Record { text: format!("{word} {e}"), json: json!({ "word": word, "element": e }) }
                })
                .collect())
        }
    }
}

fn row_text(g: &WeylGroup, row: &DecompositionRow) -> Result<String, Failure> {
    let mut lines = Vec::new();
    for (u, c) in &row.entries {
        lines.push(format!("{}: {c}", g.format_word(g.id_of(u)?)));
    }
    Ok(lines.join("\n"))
}

fn kl_cmd(c: &KlCmd) -> Outcome {
    match c {
        KlCmd::Poly { ty, x, w } => {
            let (t, g) = group(ty)?;
            let (x, w) = (element(&g, x)?, element(&g, w)?);
            let p = KlTable::get(t)?.poly(x, w).clone();
            Ok(vec![Record { text: p.to_string(), json: json!({ "x": g.element(x), "w": g.element(w), "poly": p }) }])
        }
        KlCmd::Mu { ty, x, w } => {
            let (t, g) = group(ty)?;
            let (x, w) = (element(&g, x)?, element(&g, w)?);
            Ok(vec![Record::value(KlTable::get(t)?.mu(x, w), json!({ "x": g.element(x), "w": g.element(w) }))])
        }
        KlCmd::Inverse { ty, w } => {
            let (_, g) = group(ty)?;
            let row = kl::inverse_kl_decomposition(&g.element(element(&g, w)?))?;
            Ok(vec![Record::object(row_text(&g, &row)?, &row)])
        }
        KlCmd::Parabolic { ty, w, j } => {
            let (_, g) = group(ty)?;
            let row = kl::parabolic_verma_decomposition(&g.element(element(&g, w)?), &expr::parse_generators(j)?)?;
            Ok(vec![Record::object(row_text(&g, &row)?, &row)])
        }
        KlCmd::Table { ty } => {
            let (t, g) = group(ty)?;
            let table = KlTable::get(t)?;
            let mut out = Vec::new();
            for w in 0..g.order() as u32 {
                for x in 0..g.order() as u32 {
                    let p = table.poly(x, w);
                    if p.is_zero() {
                        continue;
                    }
                    let (xw, ww) = (g.format_word(x), g.format_word(w));
                    out.push(Record { text: format!("{xw} {ww} {p}"), json: json!({ "x": xw, "w": ww, "poly": p }) });
                }
            }
            Ok(out)
        }
    }
}

fn permutation(s: &str) -> Result<Vec<u32>, Failure> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    let word: Vec<u32> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::usage(format!("bad permutation entry {t:?}"))))
        .collect::<Result<_, _>>()?;
    let mut sorted = word.clone();
    sorted.sort_unstable();
    if sorted != (1..=word.len() as u32).collect::<Vec<_>>() {
        return Err(Failure::Domain(format!("{s:?} is not a permutation of 1..{}", word.len())));
    }
    Ok(word)
}

fn tableau_text(t: &[Vec<u32>]) -> String {
    t.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

fn cells_cmd(c: &CellsCmd) -> Outcome {
    match c {
        CellsCmd::Compute { ty, kind } => {
            let (t, g) = group(ty)?;
            let kind = match kind {
                Kind::Left => CellKind::Left,
                Kind::Right => CellKind::Right,
                Kind::TwoSided => CellKind::TwoSided,
            };
            let part = cells::compute_cells(&*g, &*KlTable::get(t)?, kind);
            let text = part
                .cells
                .iter()
                .map(|cell| cell.iter().map(|&w| g.format_word(w)).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(vec![Record::object(text, &part)])
        }
        CellsCmd::Rsk { permutation: p } => {
            let word = permutation(p)?;
            let (p, q) = cells::rsk(&word);
            let shape = cells::tableau_shape(&p);
            let text = format!("P: {}; Q: {}", tableau_text(&p), tableau_text(&q));
            Ok(vec![Record { text, json: json!({ "p": p, "q": q, "shape": parts_json(&shape) }) }])
        }
    }
}

fn block_setup(b: &BlockArgs) -> Result<BlockSetup, Failure> {
    let ty = lie_type(&b.ty)?;
    let levi = LeviDescriptor::parse(ty.family(), &b.levi)?;
    let orbit = match &b.orbit {
        Some(s) => s.parse::<LeviOrbit>()?,
        None => LeviOrbit::zero(&levi),
    };
    Ok(BlockSetup::new(ty, levi, &orbit)?)
}

fn rho0(setup: &BlockSetup, s: &Option<String>) -> Result<Weight, Failure> {
    let rho = setup.rho();
    match s.as_deref().map(str::trim) {
        None | Some("rho") => Ok(rho),
        Some(s) => expr::parse(s)?.to_weight(rho.dim()),
    }
}

fn factors(f: &FactorArgs) -> GroupFactors {
    GroupFactors { h0: f.h0, abar0: f.abar0, dim_v: f.dim_v0 }
}

fn character_text(ch: &RationalCharacter) -> String {
    let mut num = String::new();
    for (i, (w, c)) in ch.numerator().iter().enumerate() {
        let (sign, abs) = if *c < Rational::zero() { ("-", -*c) } else { ("+", *c) };
        match (i, sign) {
            (0, "-") => num.push('-'),
            (0, _) => {}
            _ => num.push_str(&format!(" {sign} ")),
        }
        if abs.is_one() {
            num.push_str(&format!("e^{w}"));
        } else {
            num.push_str(&format!("{abs}·e^{w}"));
        }
    }
    if num.is_empty() {
        num.push('0');
    }
    if ch.denominator().is_empty() {
        return num;
    }
    let den: Vec<String> = ch.denominator().iter().map(|m| format!("(1 - e^{m})")).collect();
    format!("({num}) / {}", den.join(""))
}

fn character_record(ch: &RationalCharacter, ctx: &Context) -> Outcome {
    match ctx.truncate {
        Some(d) => {
            let series = ch.graded_series(d)?;
            let text = series.iter().map(Rational::to_string).collect::<Vec<_>>().join(",");
            Ok(vec![Record { text, json: json!({ "depth": d, "series": series.iter().map(rational_json).collect::<Vec<_>>() }) }])
        }
        None => Ok(vec![Record::object(character_text(ch), ch)]),
    }
}

fn simple_from(block: &BlockArgs, w: &str, rho: &Option<String>, f: &FactorArgs) -> Result<(BlockSetup, RationalCharacter), Failure> {
    let setup = block_setup(block)?;
    let g = WeylGroup::get(setup.lie_type())?;
    let w = g.element(element(&g, w)?);
    let row = kl::parabolic_verma_decomposition(&w, setup.parabolic())?;
    let rho0 = rho0(&setup, rho)?;
    let ch = simple_character::<Rational>(&rho0, &row, &setup, factors(f))?;
    Ok((setup, ch))
}

fn character(c: &CharCmd, ctx: &Context) -> Outcome {
    match c {
        CharCmd::Verma { mu0, dim, den, theta, ty, levi, orbit } => {
            let mu0 = expr::parse(mu0)?;
            let dim0 = u64::try_from(*dim).map_err(|_| Failure::usage("--dim must be nonnegative"))?;
            let ch = if let Some(ty) = ty {
                let ty = lie_type(ty)?;
                let levi = LeviDescriptor::parse(ty.family(), levi.as_deref().unwrap_or_default())?;
                let orbit = match orbit {
                    Some(s) => s.parse::<LeviOrbit>()?,
                    None => LeviOrbit::zero(&levi),
                };
                let grading = centralizer_grading(ty, &levi, &orbit)?;
                verma_character::<Rational>(&mu0.to_weight(grading.theta.len())?, dim0, &grading)?
            } else {
                let den = expr::parse_list(den)?;
                let theta = theta.as_deref().map(expr::parse).transpose()?;
                let n = den
                    .iter()
                    .chain(theta.iter())
                    .chain(std::iter::once(&mu0))
                    .map(expr::Expr::min_dim)
                    .max()
                    .unwrap_or(0)
                    .max(1);
                let theta = match theta {
                    Some(t) => t.to_weight(n)?,
                    None => Weight::from_ints(&vec![1; n]),
                };
                let den = den.iter().map(|e| e.to_weight(n)).collect::<Result<Vec<_>, _>>()?;
                RationalCharacter::verma(theta, mu0.to_weight(n)?, Rational::from_integer(dim0 as i64), den)?
            };
            character_record(&ch, ctx)
        }
        CharCmd::ParabolicImage { block, lambda, w, rho0: rho } => {
            let setup = block_setup(block)?;
            let lambda = match (lambda, w) {
                (Some(l), None) => expr::parse(l)?.to_weight(setup.rho().dim())?,
                (None, Some(w)) => {
                    let g = WeylGroup::get(setup.lie_type())?;
                    setup.label_weight(&g.element(element(&g, w)?), &rho0(&setup, rho)?)?
                }
                _ => return Err(Failure::usage("give exactly one of --lambda and --w")),
            };
            let ch = parabolic_verma_image_character::<Rational>(&lambda, &setup)?;
            character_record(&ch, ctx)
        }
        CharCmd::Simple { block, w, rho0: rho, factors: f } => {
            let (_, ch) = simple_from(block, w, rho, f)?;
            character_record(&ch, ctx)
        }
        CharCmd::Dim { block, w, rho0: rho, factors: f } => {
            let (_, ch) = simple_from(block, w, rho, f)?;
            Ok(vec![match ch.finite_dimension() {
                Dimension::Finite(d) => Record { text: d.to_string(), json: json!({ "dimension": rational_json(&d) }) },
                Dimension::Infinite => Record { text: "infinite".into(), json: json!({ "dimension": "infinite" }) },
            }])
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn triple(t: &TripleArgs) -> Result<TripleData, Failure> {
    let a_x = t.ax.unwrap_or(t.ay);
    let abar = t.abar.unwrap_or_else(|| a_x / gcd(a_x, t.ay).max(1) * t.ay);
    let data = TripleData { d_x: t.dx, d_y: t.dy, abar, a_x, a_y: t.ay, a_xy: t.axy, dim_v: t.dim_v };
    data.validate()?;
    Ok(data)
}

fn goldie_cmd(c: &GoldieCmd) -> Outcome {
    Ok(vec![match c {
        GoldieCmd::Scale { triple: t } => {
            let t = triple(t)?;
            Record::value(goldie::scale_factor(&t)?, json!({ "triple": t }))
        }
        GoldieCmd::Mult { triple: t } => {
            let t = triple(t)?;
            Record::value(goldie::bimodule_multiplicity(&t)?, json!({ "triple": t }))
        }
        GoldieCmd::Premet { triple: t, prx, pry } => {
            let t = triple(t)?;
            let z = goldie::scale_factor_via_premet(rational(prx)?, rational(pry)?, &t)?;
            Record { text: z.to_string(), json: json!({ "triple": t, "value": rational_json(&z) }) }
        }
        GoldieCmd::Report { block, w, rho0: rho, factors: f, triple: t, premet } => {
            let setup = block_setup(block)?;
            let g = WeylGroup::get(setup.lie_type())?;
            let w = g.element(element(&g, w)?);
            let row = kl::parabolic_verma_decomposition(&w, setup.parabolic())?;
            let rho0 = rho0(&setup, rho)?;
            let premet = premet.as_deref().map(rational).transpose()?;
            let r = goldie::goldie_report(&rho0, &row, &setup, factors(f), &triple(t)?, premet)?;
            let text = format!(
                "dimension={} goldie_rank={} scale_factor={} multiplicity={}",
                r.dimension, r.goldie_rank, r.scale_factor, r.multiplicity
            );
            Record::object(text, &r)
        }
    }])
}

fn weight_ints(w: &Weight) -> Result<Vec<i64>, Failure> {
    w.coords().iter().map(|c| c.to_int().ok_or_else(|| Failure::usage(format!("{w} is not integral")))).collect()
}

/// Ordinary inverse row of `w` computed from the bar-involution table.
fn oracle_inverse_row(g: &WeylGroup, w: u32) -> Result<Vec<i64>, Failure> {
    let table = oracle::kl_by_bar_involution(g)?;
    let n = g.order();
    let forward: Vec<Vec<i64>> = (0..n).map(|y| (0..n).map(|v| table[v][y].eval_at_one()).collect()).collect();
    let inv = oracle::integer_inverse(&forward).ok_or_else(|| Failure::Domain("forward matrix not invertible".into()))?;
    Ok(inv[w as usize].clone())
}

fn agree(what: &str, count: usize) -> Outcome {
    Ok(vec![Record { text: format!("agree: {count} {what}"), json: json!({ "agree": true, "cases": count, "what": what }) }])
}

fn disagree(msg: String) -> Failure {
    Failure::Domain(format!("oracle disagreement: {msg}"))
}

fn compare(what: Sweep, scope: &str) -> Outcome {
    let size = || scope.trim().parse::<u32>().map_err(|_| Failure::usage(format!("expected a size, got {scope:?}")));
    match what {
        Sweep::Collapse => {
            let mut n_checked = 0;
            for n in 1..=size()? {
                for f in [Family::B, Family::C, Family::D] {
                    let Ok(ty) = LieType::from_natural_dim(f, n) else { continue };
                    for p in partitions::all_partitions(n) {
                        let fast = partitions::collapse(&p, ty)?;
                        let slow = oracle::collapse_by_search(f, &p);
                        if slow.as_ref() != Some(&fast) {
                            return Err(disagree(format!("{f:?} collapse of {p}: {fast} vs {slow:?}")));
                        }
                        n_checked += 1;
                    }
                }
            }
            agree("partitions", n_checked)
        }
        Sweep::ComponentGroup => {
            let mut n_checked = 0;
            for rank in 1..=size()? {
                for f in [Family::B, Family::C, Family::D] {
                    let Ok(ty) = LieType::new(f, rank) else { continue };
                    for o in orbits::all_orbits(ty) {
                        for fm in [GroupForm::Full, GroupForm::Adjoint] {
                            let fast = orbits::component_group_order(&o, fm)?;
                            if oracle::component_group_by_signs(&o, fm) != Some(fast) {
                                return Err(disagree(format!("{o} {fm:?}")));
                            }
                            n_checked += 1;
                        }
                    }
                }
            }
            agree("labels", n_checked)
        }
        Sweep::Length => {
            let (_, g) = group(scope)?;
            for w in 0..g.order() as u32 {
                if g.length(w) != oracle::length_by_roots(&g.element(w)) {
                    return Err(disagree(format!("length of {}", g.element(w))));
                }
            }
            agree("elements", g.order())
        }
        Sweep::Bruhat => {
            let (_, g) = group(scope)?;
            if g.bruhat_table() != oracle::bruhat_by_reflections(&*g).as_slice() {
                return Err(disagree(format!("Bruhat order of {scope}")));
            }
            agree("elements", g.order())
        }
        Sweep::Kl => {
            let (t, g) = group(scope)?;
            let table = KlTable::get(t)?;
            let reference = oracle::kl_by_bar_involution(&*g)?;
            for w in 0..g.order() as u32 {
                for x in 0..g.order() as u32 {
                    if table.poly(x, w) != &reference[w as usize][x as usize] {
                        return Err(disagree(format!("P[{}, {}]", g.format_word(x), g.format_word(w))));
                    }
                }
            }
            agree("pairs", g.order() * g.order())
        }
        Sweep::Parabolic => {
            let (t, g) = group(scope)?;
            let table = KlTable::get(t)?;
            let mut n_checked = 0;
            for w in 0..g.order() as u32 {
                let row = oracle_inverse_row(&g, w)?;
                for mask in 0..(1u32 << g.rank()) - 1 {
                    if g.right_descent_mask(w) & mask != 0 {
                        continue;
                    }
                    let slow = oracle::parabolic_row_by_solve(&*g, &row, mask);
                    if slow.as_ref() != Some(&table.parabolic_row(&*g, w, mask)?) {
                        return Err(disagree(format!("parabolic row of {} for mask {mask}", g.format_word(w))));
                    }
                    n_checked += 1;
                }
            }
            agree("rows", n_checked)
        }
        Sweep::Cells => {
            let (t, g) = group(scope)?;
            if t.family() != Family::A {
                return Err(Failure::Domain("the cell oracle covers type A only".into()));
            }
            let left = cells::compute_cells(&*g, &*KlTable::get(t)?, CellKind::Left);
            let words: Vec<Vec<u32>> =
                (0..g.order() as u32).map(|w| g.element(w).one_line.iter().map(|&a| a as u32).collect()).collect();
            let classes = oracle::recording_classes(&words);
            for x in 0..g.order() {
                for y in 0..g.order() {
                    if (left.cell_of[x] == left.cell_of[y]) != (classes[x] == classes[y]) {
                        return Err(disagree(format!("cells of {} and {}", g.format_word(x as u32), g.format_word(y as u32))));
                    }
                }
            }
            agree("elements", g.order())
        }
    }
}

fn oracle_cmd(c: &OracleCmd) -> Outcome {
    Ok(vec![match c {
        OracleCmd::Collapse { family: f, partition } => {
            let p = partition_arg(partition)?;
            let f = family(f)?;
            LieType::from_natural_dim(f, p.size())?;
            let c = oracle::collapse_by_search(f, &p).ok_or_else(|| Failure::Domain(format!("no maximum below {p}")))?;
            Record::object(c.to_string(), &c)
        }
        OracleCmd::Length { ty, w } => {
            let (_, g) = group(ty)?;
            let e = g.element(element(&g, w)?);
            Record::value(oracle::length_by_roots(&e), json!({ "w": e }))
        }
        OracleCmd::Bruhat { ty, x, w } => {
            let (_, g) = group(ty)?;
            let (x, w) = (element(&g, x)?, element(&g, w)?);
            let table = oracle::bruhat_by_reflections(&*g);
            Record::value(table[w as usize].contains(x as usize), json!({ "x": g.element(x), "w": g.element(w) }))
        }
        OracleCmd::Kl { ty, x, w } => {
            let (_, g) = group(ty)?;
            let (x, w) = (element(&g, x)?, element(&g, w)?);
            let p = oracle::kl_by_bar_involution(&*g)?[w as usize][x as usize].clone();
            Record { text: p.to_string(), json: json!({ "x": g.element(x), "w": g.element(w), "poly": p }) }
        }
        OracleCmd::Parabolic { ty, w, j } => {
            let (_, g) = group(ty)?;
            let w = element(&g, w)?;
            let mask = g.generator_mask(&expr::parse_generators(j)?)?;
            if g.right_descent_mask(w) & mask != 0 {
                return Err(Failure::Domain(format!("{} has a right descent in J", g.format_word(w))));
            }
            let row = oracle_inverse_row(&g, w)?;
            let entries = oracle::parabolic_row_by_solve(&*g, &row, mask)
                .ok_or_else(|| Failure::Domain("row is not a parabolic combination".into()))?;
            let text = entries.iter().map(|(u, c)| format!("{}: {c}", g.format_word(*u))).collect::<Vec<_>>().join("\n");
            let json_entries: Vec<Value> = entries.iter().map(|(u, c)| json!([g.element(*u), c])).collect();
            Record { text, json: json!({ "w": g.element(w), "entries": json_entries }) }
        }
        OracleCmd::Rsk { permutation: p } => {
            let q = oracle::recording_tableau(&permutation(p)?);
            Record { text: tableau_text(&q), json: json!({ "q": q }) }
        }
        OracleCmd::Pbw { theta, gens, depth } => {
            let gens = expr::parse_list(gens)?;
            let theta = theta.as_deref().map(expr::parse).transpose()?;
            let n = gens.iter().chain(theta.iter()).map(expr::Expr::min_dim).max().unwrap_or(0).max(1);
            let theta = match theta {
                Some(t) => weight_ints(&t.to_weight(n)?)?,
                None => vec![1; n],
            };
            let gens = gens.iter().map(|g| weight_ints(&g.to_weight(n)?)).collect::<Result<Vec<_>, _>>()?;
            for g in &gens {
                if g.iter().zip(&theta).map(|(a, b)| a * b).sum::<i64>() >= 0 {
                    return Err(Failure::Domain(format!("generator {g:?} does not pair negatively with theta")));
                }
            }
            let counts = oracle::pbw_counts(&theta, &gens, *depth);
            let text = counts.iter().map(|(w, c)| format!("{w:?}: {c}")).collect::<Vec<_>>().join("\n");
            let entries: Vec<Value> = counts.iter().map(|(w, c)| json!([w, c])).collect();
            Record { text, json: json!({ "theta": theta, "depth": depth, "counts": entries }) }
        }
        OracleCmd::ComponentGroup { label: l, form: f } => {
            let o = label(l)?;
            let v = oracle::component_group_by_signs(&o, form(f)?)
                .ok_or_else(|| Failure::Domain(format!("no sign oracle for type {}", o.lie_type())))?;
            Record::value(v, json!({ "label": o.to_string() }))
        }
        OracleCmd::Compare { what, scope } => return compare(*what, scope),
    }])
}
