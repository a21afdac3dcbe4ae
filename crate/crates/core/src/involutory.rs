//! Involutory quandles: cycles, pair orders, the generator-order lemmas,
//! and the equivalence theorems as executable suites, together with the
//! group-theoretic corollaries for conjugation quandles of involutions.

use serde::Serialize;

use crate::congruence::{self, TC_CAP};
use crate::displacement::{self, DisplacementData};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::perm::Permutation;
use crate::properties;
use crate::table::LeftQuasigroup;

fn require_involutory(q: &LeftQuasigroup) -> Result<()> {
    if q.is_quandle() && q.is_involutory() {
        Ok(())
    } else {
        Err(Error::NotInvolutory)
    }
}

/// The cycle generated by `a` with base `b`: the sequence
/// `a^0 = b, a^1 = a, a^2, …` where `a^{2i} = (L_aL_b)^i(b)` and
/// `a^{2i+1} = (L_aL_b)^i(a)`.
#[derive(Debug, Clone, Serialize)]
pub struct CycleData {
    pub a: usize,
    pub b: usize,
    /// the sequence up to (and excluding) its first repeated value
    pub seq: Vec<usize>,
    /// least k > 0 with a^k = b
    pub ord: usize,
    /// the order of L_aL_b
    pub gen_order: u64,
}

/// Computes the cycle data for a pair by walking the sequence with a
/// visited set; the parity shortcuts below are only used as oracles in
/// tests, so the walk stays valid on non-faithful inputs.
pub fn cycle(q: &LeftQuasigroup, a: usize, b: usize) -> Result<CycleData> {
    require_involutory(q)?;
    let n = q.order();
    if a >= n || b >= n {
        return Err(Error::PointOutOfRange(a.max(b)));
    }
    let la = q.left_translation(a);
    let lb = q.left_translation(b);
    let g = la.compose(&lb); // L_aL_b
    let gen_order = g.order();
    let mut seq = Vec::new();
    let mut seen = vec![false; n];
    let mut ord = None;
    // track (L_aL_b)^i applied to b and to a
    let (mut xb, mut xa) = (b, a);
    let mut k = 0usize;
    loop {
        for &val in [xb, xa].iter() {
            if k > 0 && val == b && ord.is_none() {
                ord = Some(k);
            }
            if !seen[val] {
                seen[val] = true;
                seq.push(val);
            }
            k += 1;
        }
        if let Some(ord) = ord {
            // a^{2m} = b guarantees termination
            return Ok(CycleData { a, b, seq, ord, gen_order });
        }
        xb = g.apply(xb);
        xa = g.apply(xa);
    }
}

/// `ord_{a,b}`: the least positive k with a^k = b.
pub fn ord(q: &LeftQuasigroup, a: usize, b: usize) -> Result<usize> {
    Ok(cycle(q, a, b)?.ord)
}

/// A pair-sweep verdict with the failing `(a, b, n)` triples, if any.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub pass: bool,
    pub failures: Vec<(usize, usize, usize)>,
}

fn pair_report(failures: Vec<(usize, usize, usize)>) -> PairReport {
    PairReport { pass: failures.is_empty(), failures }
}

/// Verifies, for all pairs and all exponents up to the generator order,
/// that `(L_aL_b)^{2n+1} = L_aL_{(L_bL_a)^n(b)}` and
/// `(L_aL_b)^{2n} = L_aL_{(L_bL_a)^n(a)}`.
pub fn check_gen_of_dis(q: &LeftQuasigroup) -> Result<PairReport> {
    require_involutory(q)?;
    let size = q.order();
    let mut failures = Vec::new();
    for a in 0..size {
        for b in 0..size {
            let la = q.left_translation(a);
            let lb = q.left_translation(b);
            let g = la.compose(&lb);
            let h = lb.compose(&la); // L_bL_a
            let bound = g.order() as usize;
            let mut g_pow = Permutation::identity(size); // g^{2n}
            let (mut hb, mut ha) = (b, a); // (L_bL_a)^n of b and of a
            for n in 0..=bound {
                let even_rhs = la.compose(&q.left_translation(ha));
                let odd_lhs = g.compose(&g_pow); // g^{2n+1}
                let odd_rhs = la.compose(&q.left_translation(hb));
                if g_pow != even_rhs || odd_lhs != odd_rhs {
                    failures.push((a, b, n));
                }
                g_pow = g.compose(&g.compose(&g_pow));
                hb = h.apply(hb);
                ha = h.apply(ha);
            }
        }
    }
    Ok(pair_report(failures))
}

/// `u_n(a,b)`: `u_0 = a`, `u_{n+1} = u_n ∗ b`.
pub fn u_term(q: &LeftQuasigroup, a: usize, b: usize, n: usize) -> usize {
    let mut u = a;
    for _ in 0..n {
        u = q.mul(u, b);
    }
    u
}

/// Verifies `(L_aL_b)^{2^n} = L_{u_n(a,b)}L_b` for all pairs, with `n`
/// ranging past the point where the power reaches the identity.
pub fn check_gen_of_dis2(q: &LeftQuasigroup) -> Result<PairReport> {
    require_involutory(q)?;
    let size = q.order();
    let mut failures = Vec::new();
    for a in 0..size {
        for b in 0..size {
            let la = q.left_translation(a);
            let lb = q.left_translation(b);
            let g = la.compose(&lb);
            let bound = 1 + (64 - g.order().leading_zeros()) as usize;
            let mut power = g.clone(); // g^{2^n}
            let mut u = a;
            for n in 0..=bound {
                let rhs = q.left_translation(u).compose(&lb);
                if power != rhs {
                    failures.push((a, b, n));
                }
                power = power.compose(&power);
                u = q.mul(u, b);
            }
        }
    }
    Ok(pair_report(failures))
}

/// Shape of the subquandle generated by one pair.
#[derive(Debug, Clone, Serialize)]
pub struct TwoGenProfile {
    pub connected: bool,
    pub latin: bool,
    pub odd_order: bool,
    pub size: usize,
}

pub fn two_gen_profile(q: &LeftQuasigroup, a: usize, b: usize) -> Result<TwoGenProfile> {
    require_involutory(q)?;
    let set = q.sg(&[a, b])?;
    let sub = q.induced_sub(&set)?;
    Ok(TwoGenProfile {
        connected: properties::is_connected(&sub),
        latin: properties::is_latin(&sub),
        odd_order: set.len() % 2 == 1,
        size: set.len(),
    })
}

/// One named check inside a suite, with the least witness on failure.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckItem>,
    pub pass: bool,
}

impl SuiteReport {
    fn from_checks(checks: Vec<CheckItem>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { checks, pass }
    }

    pub fn check(&self, name: &str) -> Option<&CheckItem> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn item(name: &str, pass: bool, witness: Option<Vec<usize>>) -> CheckItem {
    CheckItem { name: name.to_string(), pass, witness: if pass { None } else { witness } }
}

/// The equivalence theorems for one finite involutory quandle:
/// superconnected ⟺ latin ⟺ every pair order equal to the generator order
/// and odd; the superfaithful variant; the implication from
/// superfaithfulness; cyclicity of two-generated displacement groups; the
/// solvability consequence of odd generator orders; and the per-pair
/// two-generated equivalence.
pub fn theorem_suite_involutory(q: &LeftQuasigroup) -> Result<SuiteReport> {
    require_involutory(q)?;
    let n = q.order();
    // per-pair data: ord, |L_aL_b|, and the two-generated profile
    let mut ords = vec![vec![0usize; n]; n];
    let mut gens = vec![vec![0u64; n]; n];
    for a in 0..n {
        for b in 0..n {
            let data = cycle(q, a, b)?;
            ords[a][b] = data.ord;
            gens[a][b] = data.gen_order;
        }
    }
    let first_pair = |pred: &dyn Fn(usize, usize) -> bool| -> Option<Vec<usize>> {
        for a in 0..n {
            for b in 0..n {
                if pred(a, b) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    };
    let ord_eq_odd = |a: usize, b: usize| -> bool {
        ords[a][b] as u64 == gens[a][b] && ords[a][b] % 2 == 1
    };
    let all_ord_eq_odd = first_pair(&|a, b| !ord_eq_odd(a, b)).is_none();
    let superconnected = properties::is_superconnected(q);
    let superfaithful = properties::is_superfaithful(q);
    let latin = properties::is_latin(q);

    let mut checks = Vec::new();
    checks.push(item(
        "superconnected_latin_odd_orders",
        superconnected == latin && latin == all_ord_eq_odd,
        Some(vec![
            superconnected as usize,
            latin as usize,
            all_ord_eq_odd as usize,
        ]),
    ));
    checks.push(item(
        "superfaithful_latin_odd_orders",
        superfaithful == latin && latin == all_ord_eq_odd,
        Some(vec![
            superfaithful as usize,
            latin as usize,
            all_ord_eq_odd as usize,
        ]),
    ));
    {
        let witness = if superfaithful {
            first_pair(&|a, b| !ord_eq_odd(a, b))
        } else {
            None
        };
        checks.push(item(
            "superfaithful_forces_odd_equal_orders",
            witness.is_none(),
            witness,
        ));
    }
    {
        // Dis(sg(a,b)) is cyclic, generated by the restriction of L_aL_b
        let witness = first_pair(&|a, b| {
            let set = q.sg(&[a, b]).expect("valid seeds");
            let sub = q.induced_sub(&set).expect("closed set");
            let g = q.left_translation(a).compose(&q.left_translation(b));
            let restricted = Permutation::from_images(
                set.iter()
                    .map(|&x| set.binary_search(&g.apply(x)).expect("invariant set"))
                    .collect(),
            )
            .expect("bijection on an invariant set");
            let dis = displacement::dis(&sub);
            dis.order() != restricted.order() as u128 || !dis.contains(&restricted)
        });
        checks.push(item(
            "two_generated_displacement_cyclic",
            witness.is_none(),
            witness,
        ));
    }
    {
        let all_gen_odd = first_pair(&|a, b| gens[a][b] % 2 == 0).is_none();
        let pass = if all_gen_odd {
            let lambda = congruence::cayley_kernel(q).0;
            let (factor, _) = q.quotient(&lambda)?;
            properties::is_latin(&factor) && displacement::dis(q).is_solvable()?
        } else {
            true // vacuous
        };
        checks.push(item("odd_orders_force_latin_factor_and_solvability", pass, None));
    }
    {
        let witness = first_pair(&|a, b| {
            let p = two_gen_profile(q, a, b).expect("involutory checked");
            let lhs = p.connected;
            let mid = p.latin && p.odd_order;
            let rhs = ords[a][b] % 2 == 1;
            !(lhs == mid && mid == rhs)
        });
        checks.push(item("two_generated_equivalence", witness.is_none(), witness));
    }
    Ok(SuiteReport::from_checks(checks))
}

fn is_n_locally_reductive(q: &LeftQuasigroup, n: usize) -> bool {
    let size = q.order();
    (0..size).all(|a| (0..size).all(|b| u_term(q, a, b, n) == b))
}

/// The local-reductivity correspondence: the faithful factor is
/// n-locally reductive exactly when every `(L_aL_b)^{2^n}` is the
/// identity, and the existence forms agree.
pub fn reductive_suite(q: &LeftQuasigroup) -> Result<SuiteReport> {
    require_involutory(q)?;
    let size = q.order();
    let lambda = congruence::cayley_kernel(q).0;
    let (factor, _) = q.quotient(&lambda)?;
    let mut max_gen: u64 = 1;
    let mut powers: Vec<Permutation> = Vec::new(); // generators L_aL_b
    for a in 0..size {
        for b in 0..size {
            let g = q.left_translation(a).compose(&q.left_translation(b));
            max_gen = max_gen.max(g.order());
            powers.push(g);
        }
    }
    let bound = 2 + (64 - max_gen.leading_zeros()) as usize;
    let mut checks = Vec::new();
    let mut current = powers;
    for n in 0..=bound {
        let lhs = is_n_locally_reductive(&factor, n);
        let rhs = current.iter().all(|g| g.is_identity());
        checks.push(item(
            &format!("degree_{n}_equivalence"),
            lhs == rhs,
            Some(vec![n, lhs as usize, rhs as usize]),
        ));
        current = current.iter().map(|g| g.compose(g)).collect();
    }
    // existence form: locally reductive ⟺ some 2-power of every generator
    // is the identity ⟺ every generator order is a power of two
    let lhs = properties::locally_reductive_degree(q).is_some();
    let rhs = (0..size).all(|a| {
        (0..size).all(|b| {
            q.left_translation(a)
                .compose(&q.left_translation(b))
                .order()
                .is_power_of_two()
        })
    });
    checks.push(item(
        "existence_equivalence",
        lhs == rhs,
        Some(vec![lhs as usize, rhs as usize]),
    ));
    Ok(SuiteReport::from_checks(checks))
}

/// Identity check: `sg(a,b)` equals the union of the `⟨L_aL_b⟩`-orbits of
/// `a` and of `b`, for every pair. Returns the least failing pair.
pub fn finiteness_identity_witness(q: &LeftQuasigroup) -> Result<Option<(usize, usize)>> {
    require_involutory(q)?;
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            let g = q.left_translation(a).compose(&q.left_translation(b));
            let mut set = Vec::new();
            for start in [a, b] {
                let mut x = start;
                loop {
                    set.push(x);
                    x = g.apply(x);
                    if x == start {
                        break;
                    }
                }
            }
            set.sort_unstable();
            set.dedup();
            if set != q.sg(&[a, b])? {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Parity law: `ord_{a,b}` is odd exactly when `sg(a,b)` is connected.
pub fn ord_parity_witness(q: &LeftQuasigroup) -> Result<Option<(usize, usize)>> {
    require_involutory(q)?;
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            let odd = ord(q, a, b)? % 2 == 1;
            let set = q.sg(&[a, b])?;
            let connected = properties::is_connected(&q.induced_sub(&set)?);
            if odd != connected {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// For nilpotent involutory quandles: latin ⟺ connected ∧ faithful, and
/// the superfaithful variant. Returns None (vacuous) when the structure
/// is not nilpotent or is too large for the exact commutator.
pub fn nilpotent_theorem_check(q: &LeftQuasigroup) -> Result<Option<bool>> {
    require_involutory(q)?;
    if q.order() > TC_CAP {
        return Ok(None);
    }
    let data = DisplacementData::new(q);
    let nilpotent = congruence::nilpotence_length(&data)?.is_some();
    if !nilpotent {
        return Ok(None);
    }
    let latin = properties::is_latin(q);
    let faithful_form = latin == (properties::is_connected(q) && properties::is_faithful(q));
    let superfaithful_form =
        latin == (properties::is_connected(q) && properties::is_superfaithful(q));
    let superconnected_form = !properties::is_superconnected(q) || latin;
    Ok(Some(faithful_form && superfaithful_form && superconnected_form))
}

/// Corollaries for a finite group generated by a conjugacy class of
/// involutions, phrased through the coset orders `|abZ(G)|` in `G/Z(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct GroupCorollaryReport {
    pub class_size: usize,
    pub no_commuting_pairs: bool,
    pub all_coset_orders_odd: bool,
    pub all_coset_orders_two_power: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    /// no commuting pairs ⇒ solvable
    pub commuting_implies_solvable: bool,
    /// all |abZ(G)| odd ⇒ solvable
    pub odd_implies_solvable: bool,
    /// nilpotent ⟺ all |abZ(G)| are powers of two
    pub nilpotent_equivalence: bool,
    pub pass: bool,
}

pub fn group_corollaries(g: &FiniteGroup, class: &[usize]) -> Result<GroupCorollaryReport> {
    if class.is_empty() || class.iter().any(|&c| g.element_order(c) != 2) {
        return Err(Error::NotInvolutions);
    }
    for &c in class {
        for x in 0..g.order() {
            if !class.contains(&g.conjugate(c, x)) {
                return Err(Error::NotClosedUnderConjugation);
            }
        }
    }
    if g.subgroup_closure(class).len() != g.order() {
        return Err(Error::ClassDoesNotGenerate);
    }
    let center = g.center_set();
    let (quot, coset_of) = g.quotient_by_normal(&center)?;
    let mut coset_orders = Vec::new();
    let mut no_commuting_pairs = true;
    for &a in class {
        for &b in class {
            coset_orders.push(quot.element_order(coset_of[g.mul(a, b)]));
            if a != b && g.mul(a, b) == g.mul(b, a) {
                no_commuting_pairs = false;
            }
        }
    }
    let all_coset_orders_odd = coset_orders.iter().all(|&o| o % 2 == 1);
    let all_coset_orders_two_power = coset_orders.iter().all(|&o| o.is_power_of_two());
    let solvable = g.is_solvable();
    let nilpotent = g.is_nilpotent();
    let commuting_implies_solvable = !no_commuting_pairs || solvable;
    let odd_implies_solvable = !all_coset_orders_odd || solvable;
    let nilpotent_equivalence = nilpotent == all_coset_orders_two_power;
    let pass = commuting_implies_solvable && odd_implies_solvable && nilpotent_equivalence;
    Ok(GroupCorollaryReport {
        class_size: class.len(),
        no_commuting_pairs,
        all_coset_orders_odd,
        all_coset_orders_two_power,
        solvable,
        nilpotent,
        commuting_implies_solvable,
        odd_implies_solvable,
        nilpotent_equivalence,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::table::fixtures::*;

    #[test]
    fn cycle_examples() {
        let c = cycle(&dihedral(3), 1, 0).unwrap();
        assert_eq!(c.seq, vec![0, 1, 2]);
        assert_eq!(c.ord, 3);
        assert_eq!(c.gen_order, 3);

        let c = cycle(&dihedral(3), 2, 2).unwrap();
        assert_eq!(c.ord, 1);

        let c = cycle(&dihedral(4), 1, 0).unwrap();
        assert_eq!(c.seq, vec![0, 1, 2, 3]);
        assert_eq!(c.ord, 4);
        assert_eq!(c.gen_order, 2);

        // non-faithful input: ord and |L_aL_b| differ on R_6
        let c = cycle(&dihedral(6), 1, 0).unwrap();
        assert_eq!(c.ord, 6);
        assert_eq!(c.gen_order, 3);

        assert!(matches!(cycle(&t4(), 0, 1), Err(Error::NotInvolutory)));
        assert!(matches!(cycle(&t9(), 0, 1), Err(Error::NotInvolutory)));
    }

    #[test]
    fn cycle_parity_formulas_agree() {
        // oracle: a^{2i} = (L_aL_b)^i(b), a^{2i+1} = (L_aL_b)^i(a)
        for q in [dihedral(3), dihedral(4), dihedral(5), dihedral(6), projection(3)] {
            let n = q.order();
            for a in 0..n {
                for b in 0..n {
                    let data = cycle(&q, a, b).unwrap();
                    let g = q.left_translation(a).compose(&q.left_translation(b));
                    let k = data.ord;
                    let expected = if k % 2 == 0 {
                        (0..k / 2).fold(b, |x, _| g.apply(x))
                    } else {
                        (0..k / 2).fold(a, |x, _| g.apply(x))
                    };
                    assert_eq!(expected, b, "ord mismatch at ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn generator_lemmas() {
        for q in [dihedral(3), dihedral(4), dihedral(5), dihedral(6), projection(4)] {
            assert!(check_gen_of_dis(&q).unwrap().pass);
            assert!(check_gen_of_dis2(&q).unwrap().pass);
        }
        assert!(matches!(check_gen_of_dis(&t4()), Err(Error::NotInvolutory)));
    }

    #[test]
    fn two_gen_profiles() {
        let p = two_gen_profile(&dihedral(3), 1, 0).unwrap();
        assert!(p.connected && p.latin && p.odd_order);
        assert_eq!(p.size, 3);
        let p = two_gen_profile(&dihedral(4), 1, 0).unwrap();
        assert!(!p.connected);
        assert_eq!(p.size, 4);
        let p = two_gen_profile(&dihedral(4), 2, 2).unwrap();
        assert!(p.connected);
        assert_eq!(p.size, 1);
    }

    #[test]
    fn theorem_suites() {
        for q in [
            dihedral(3),
            dihedral(4),
            dihedral(5),
            dihedral(6),
            dihedral(9),
            projection(1),
            projection(4),
        ] {
            let report = theorem_suite_involutory(&q).unwrap();
            assert!(report.pass, "suite failed on order {}: {:?}", q.order(), report);
        }
        // R_5: everything positive
        let report = theorem_suite_involutory(&dihedral(5)).unwrap();
        assert!(report.check("superconnected_latin_odd_orders").unwrap().pass);
        // R_4: equivalences hold with all sides false
        assert!(theorem_suite_involutory(&dihedral(4)).unwrap().pass);
    }

    #[test]
    fn reductive_suites() {
        for q in [dihedral(3), dihedral(4), dihedral(8), projection(3)] {
            let report = reductive_suite(&q).unwrap();
            assert!(report.pass, "reductive suite failed on order {}", q.order());
        }
        // R_4 is a positive instance at degree 1, R_3 has no degree at all
        assert!(properties::locally_reductive_degree(&dihedral(4)).is_some());
        assert!(properties::locally_reductive_degree(&dihedral(3)).is_none());
    }

    #[test]
    fn corpus_identities() {
        for q in [dihedral(3), dihedral(4), dihedral(5), dihedral(6), projection(4)] {
            assert_eq!(finiteness_identity_witness(&q).unwrap(), None);
            assert_eq!(ord_parity_witness(&q).unwrap(), None);
            assert_ne!(nilpotent_theorem_check(&q).unwrap(), Some(false));
        }
    }

    #[test]
    fn group_corollary_examples() {
        // Sym(3), transpositions: no commuting pairs, solvable
        let s3 = groups::symmetric(3);
        let class = s3.conjugacy_class(
            (0..6).find(|&x| s3.element_order(x) == 2).unwrap(),
        );
        let report = group_corollaries(&s3, &class).unwrap();
        assert!(report.no_commuting_pairs && report.solvable && report.pass);

        // Sym(4), transpositions: hypotheses fail, group2 still agrees
        let s4 = groups::symmetric(4);
        let transposition = (0..24)
            .find(|&x| s4.element_order(x) == 2 && s4.conjugacy_class(x).len() == 6)
            .unwrap();
        let class = s4.conjugacy_class(transposition);
        let report = group_corollaries(&s4, &class).unwrap();
        assert!(!report.no_commuting_pairs);
        assert!(!report.all_coset_orders_odd);
        assert!(!report.nilpotent && !report.all_coset_orders_two_power);
        assert!(report.pass);

        // one reflection class of the order-8 dihedral group does not generate
        let d4 = groups::dihedral_group(4);
        let class = d4.conjugacy_class(4); // the reflection s
        assert_eq!(class.len(), 2);
        assert!(matches!(
            group_corollaries(&d4, &class),
            Err(Error::ClassDoesNotGenerate)
        ));
        // non-involutions are rejected
        assert!(matches!(
            group_corollaries(&s3, &[0]),
            Err(Error::NotInvolutions)
        ));
    }
}
