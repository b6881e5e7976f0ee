mod common;

use common::{poly, MU, MU_CHAIN, NU, X_N2};
use sturmcert::cert::lemma7_polynomial;
use sturmcert::exact::{int, ratio};
use sturmcert::paperlib::{build_eta, build_lemma7_difference, build_mu, build_nu};
use sturmcert::sturm::{build_chain, sign_variations, Normalization};
use sturmcert::trig::cos_to_alg;

#[test]
fn mu_expansion() {
    let mu = build_mu();
    assert_eq!(mu, poly(MU));
    assert_eq!(mu.degree(), Some(10));
    assert_eq!(mu.coeff(0), ratio(401, 128));
}

#[test]
fn nu_expansion() {
    let nu = build_nu();
    assert_eq!(nu, poly(NU));
    assert_eq!(nu.degree(), Some(26));
    assert_eq!(nu.leading().cloned(), Some(int(-1440000)));
    assert_eq!(nu.coeff(0), ratio(160801, 16384));
}

#[test]
fn eta_derivative() {
    let d = build_eta().derivative();
    assert_eq!(d, poly("60*x^5+30*x^4-48*x^3-33/2*x^2+29/4*x+11/8"));
}

#[test]
fn n2_difference_expansion() {
    let p = build_lemma7_difference(2).unwrap();
    let x = cos_to_alg(&p, "Y").unwrap();
    assert_eq!(x, poly(X_N2));
    assert_eq!(x.coeff(0), ratio(-1475, 66));
    assert_eq!(lemma7_polynomial(2), x);
}

#[test]
fn mu_chain_head() {
    let chain = build_chain(&build_mu(), Normalization::LeadingUnit).unwrap();
    for (k, text) in MU_CHAIN.iter().enumerate() {
        assert_eq!(chain.members()[k + 1], poly(text), "member {}", k + 1);
    }
    assert_eq!(chain.members()[4].leading().cloned(), Some(int(-1)));
    assert_eq!(chain.members()[4].coeff(5), ratio(-3617836265259, 2968641792581));
    assert_eq!(chain.len(), 11);
}

#[test]
fn mu_sign_variations() {
    let chain = build_chain(&build_mu(), Normalization::LeadingUnit).unwrap();
    assert_eq!(sign_variations(&chain, &ratio(65, 100)), 3);
    assert_eq!(sign_variations(&chain, &ratio(95, 100)), 3);
}
