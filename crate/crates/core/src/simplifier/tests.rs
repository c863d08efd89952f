use proptest::prelude::*;

use super::*;
use crate::expr::tests::arb_expr;
use crate::expr::{parse, Vocabulary};
use crate::symfunc::{complete_homogeneous, splitting_oracle, Alphabet};

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn simp(s: &str, n: usize) -> Polynomial {
    lambda_simp(&parse(s, &Vocabulary::abstract_n(n)).unwrap(), n).unwrap()
}

#[test]
fn simplification_examples() {
    assert_eq!(simp("lambda^2(x1)", 1), p("x1_2"));
    assert_eq!(simp("sigma^2(x1)", 1), p("x1_1^2 - x1_2"));
    assert_eq!(simp("lambda^2(x1 + x2)", 2), p("x1_2 + x1_1*x2_1 + x2_2"));
    assert_eq!(simp("psi^2(x1)", 1), p("2*x1_2 - x1_1^2"));
    assert_eq!(simp("lambda^2(x1) + lambda^2(x1)", 1), simp("2*lambda^2(x1)", 1));
    assert_eq!(simp("lambda^0(x1) + 3", 1), p("4"));
    assert_eq!(simp("lambda^2(-x1)", 1), p("x1_1^2 - x1_2"));
    assert_eq!(simp("lambda^2(3)", 1), p("6"));
    assert_eq!(simp("sigma^2(3)", 1), p("3"));
}

#[test]
fn apply_psi_examples() {
    let mut t = MuTable::free(&[4, 4]);
    assert_eq!(t.apply_psi(&p("x1_1"), 2).unwrap(), p("2*x1_2 - x1_1^2"));
    assert_eq!(t.apply_psi(&p("x1_1^2"), 1).unwrap(), p("x1_1^2"));
    assert_eq!(
        t.apply_psi(&p("x1_1*x2_1"), 2).unwrap(),
        p("(2*x1_2 - x1_1^2)*(2*x2_2 - x2_1^2)")
    );
    assert_eq!(t.mu(1, 3, 1).unwrap(), t.psi(1, 3).unwrap());
    assert!(matches!(
        t.apply_psi(&p("x1_3"), 2),
        Err(Error::DepthExceeded { needed: 6, bound: 4, .. })
    ));
    assert!(t.apply_psi(&p("z"), 2).is_err());
}

#[test]
fn sigma_basis_examples() {
    assert_eq!(to_sigma_basis(&p("x1_2")).unwrap(), p("s1_1^2 - s1_2"));
    assert_eq!(to_sigma_basis(&p("x1_1")).unwrap(), p("s1_1"));
    assert_eq!(to_sigma_basis(&p("1")).unwrap(), p("1"));
    let e = simp("sigma^3(x1) * x2", 2);
    assert_eq!(to_sigma_basis(&e).unwrap(), p("s1_3*s2_1"));
    assert!(to_sigma_basis(&p("y")).is_err());
}

#[test]
fn lambda_var_names() {
    assert_eq!(parse_lambda_var(lambda_var(12, 3)), Some((12, 3)));
    assert_eq!(parse_lambda_var(VarId::named("x1")), None);
    assert_eq!(parse_lambda_var(VarId::named("s1_2")), None);
}

#[test]
fn oracle_agrees_on_single_generator_terms() {
    for s in [
        "lambda^3(x1)",
        "sigma^2(lambda^2(x1))",
        "lambda^2(psi^3(x1))",
        "psi^2(sigma^3(x1)) - x1 * lambda^2(x1 * x1)",
        "lambda^3(x1 * x1)",
        "sigma^3(lambda^2(x1) - x1)",
    ] {
        check_oracle(&parse(s, &Vocabulary::abstract_n(1)).unwrap());
    }
}

fn check_oracle(e: &Expr) {
    let w = depth(e, 1).0[0].max(1);
    let alpha = Alphabet::new("u1_", w).unwrap();
    let order = w.max(6);
    let want = splitting_oracle(e, &[w], order).unwrap();
    let got = lambda_simp(e, 1).unwrap();
    let h = got.substitute_with(|v| {
        parse_lambda_var(v).map(|(_, j)| complete_homogeneous(j, &alpha))
    });
    assert_eq!(h, want, "{e}");
}

fn terms(n: usize, e: &Expr, k: u32) -> Vec<Polynomial> {
    (0..=k).map(|i| lambda_simp(&Expr::lambda(i, e.clone()), n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lambda_addition_axiom(a in arb_expr(2, 2), b in arb_expr(2, 2), n in 1u32..4) {
        let lhs = lambda_simp(&Expr::lambda(n, a.clone().add(b.clone())), 2).unwrap();
        let la = terms(2, &a, n);
        let lb = terms(2, &b, n);
        let rhs: Polynomial = (0..=n as usize).map(|i| &la[i] * &lb[n as usize - i]).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn opposition_and_sign_rule(a in arb_expr(2, 2), n in 1u32..4) {
        let mut acc = Polynomial::zero();
        for i in 0..=n {
            let l = lambda_simp(&Expr::lambda(i, a.clone()), 2).unwrap();
            let s = lambda_simp(&Expr::sigma(n - i, a.clone()), 2).unwrap();
            let t = &l * &s;
            if i % 2 == 0 { acc += &t } else { acc -= &t }
        }
        prop_assert!(acc.is_zero());
        let s = lambda_simp(&Expr::sigma(n, a.clone().neg()), 2).unwrap();
        let l = lambda_simp(&Expr::lambda(n, a.clone()), 2).unwrap();
        prop_assert_eq!(s, if n % 2 == 0 { l } else { -l });
    }

    #[test]
    fn adams_multiplicative_and_composes(a in arb_expr(2, 2), b in arb_expr(2, 2), i in 1u32..4, j in 1u32..3) {
        let prod = lambda_simp(&Expr::psi(i, a.clone().mul(b.clone())), 2).unwrap();
        let pa = lambda_simp(&Expr::psi(i, a.clone()), 2).unwrap();
        let pb = lambda_simp(&Expr::psi(i, b.clone()), 2).unwrap();
        prop_assert_eq!(prod, &pa * &pb);
        let w = lambda_simp(&a, 2).unwrap();
        let d = depth(&a, 2).scale((i * j) as usize);
        let mut t = MuTable::free(&d.0);
        let once = t.apply_psi(&w, i).unwrap();
        let twice = t.apply_psi(&once, j).unwrap();
        prop_assert_eq!(twice, t.apply_psi(&w, i * j).unwrap());
    }

    #[test]
    fn output_respects_depth(e in arb_expr(2, 3)) {
        let d = depth(&e, 2);
        let out = lambda_simp(&e, 2).unwrap();
        for v in out.variables() {
            let (i, j) = parse_lambda_var(v).unwrap();
            prop_assert!(j <= d.get(i));
        }
    }

    #[test]
    fn oracle_equivalence(e in arb_expr(1, 3)) {
        prop_assume!(depth(&e, 1).0[0] <= 6);
        check_oracle(&e);
    }
}
