//! Worked examples for every public operation.

use grassmoduli::littlewood::lr_coefficient;
use grassmoduli::moduli::{
    center_weight_of_component, classify_components, equal_pq_report, gs_intersection_sym,
    gs_threshold, gs_v0v0_intersection_sym, lowest_weight_closed_form, moduli_report, CenterWeight,
    Parity,
};
use grassmoduli::oracle::{
    lowest_weight_pairing, schur_poly, square_vars, to_schur_basis, MonomialPoly,
};
use grassmoduli::partition::{
    dim_gl, dim_rect, fund_to_partition, partition_to_fund, FundamentalCoeffs, Partition,
};
use grassmoduli::rect::{rect_square_closed_form, verify_lr_rules_witness, RectSquareComponent};
use grassmoduli::schur::{adams2, alt_square, multiply, sym_square, SchurExpansion};
use num_bigint::{BigInt, BigUint};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn fund(n: usize, c: &[u32]) -> FundamentalCoeffs {
    FundamentalCoeffs::new(n, c.to_vec()).unwrap()
}

fn expansion(terms: &[(&str, i64)]) -> SchurExpansion {
    SchurExpansion::from_terms(terms.iter().map(|&(p, c)| (part(p), BigInt::from(c))))
}

fn w(num: i64, den: i64) -> CenterWeight {
    CenterWeight::new(num, den)
}

#[test]
fn fundamental_coordinates() {
    assert_eq!(fund_to_partition(&fund(4, &[0, 1, 0])), part("1,1"));
    assert_eq!(fund_to_partition(&fund(4, &[1, 0, 1])), part("2,1,1"));
    for k in 0..4 {
        assert_eq!(
            fund_to_partition(&fund(6, &[0, 0, k, 0, 0])),
            Partition::rectangle(k, 3)
        );
    }
    assert_eq!(
        partition_to_fund(&part("2,2"), 4).unwrap(),
        fund(4, &[0, 2, 0])
    );
    assert_eq!(
        partition_to_fund(&part("2,1,1"), 4).unwrap(),
        fund(4, &[1, 0, 1])
    );
    assert_eq!(
        partition_to_fund(&part("3,3,3,3"), 4).unwrap(),
        fund(4, &[0, 0, 0])
    );
    assert!(partition_to_fund(&part("1,1,1,1,1"), 4).is_err());
}

#[test]
fn dimensions() {
    assert_eq!(dim_gl(&part("1,1"), 4), BigUint::from(6u32));
    assert_eq!(dim_gl(&part("2,2"), 4), BigUint::from(20u32));
    assert_eq!(dim_gl(&part("2,1,1"), 4), BigUint::from(15u32));
    assert_eq!(dim_gl(&Partition::empty(), 3), BigUint::from(1u32));
    for k in 0..6 {
        assert_eq!(dim_rect(2, k, 1).unwrap(), BigUint::from(k as u32 + 1));
    }
    assert_eq!(dim_rect(4, 1, 2).unwrap(), BigUint::from(6u32));
    assert_eq!(dim_rect(4, 2, 2).unwrap(), BigUint::from(20u32));
}

#[test]
fn partition_strings() {
    assert_eq!(part(""), Partition::empty());
    assert_eq!(part("0"), Partition::empty());
    assert_eq!(part("2,1,1").to_string(), "2,1,1");
    assert!("1,2".parse::<Partition>().is_err());
    assert!("a".parse::<Partition>().is_err());
}

#[test]
fn products() {
    let s11 = SchurExpansion::schur(part("1,1"));
    assert_eq!(
        multiply(&s11, &s11, 4),
        expansion(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", 1)])
    );
    for k in 0..5u32 {
        let sk = SchurExpansion::schur(Partition::rectangle(k, 1));
        let want = SchurExpansion::from_terms(
            (0..=k).map(|i| (Partition::new(vec![2 * k - i, i]).unwrap(), BigInt::from(1))),
        );
        assert_eq!(multiply(&sk, &sk, 2), want);
    }
    let l = SchurExpansion::schur(part("3,1"));
    assert_eq!(multiply(&SchurExpansion::one(), &l, 4), l);
}

#[test]
fn adams_and_split() {
    assert_eq!(adams2(&part("1"), 2), expansion(&[("2", 1), ("1,1", -1)]));
    assert_eq!(
        adams2(&part("1,1"), 4),
        expansion(&[("2,2", 1), ("2,1,1", -1), ("1,1,1,1", 1)])
    );
    assert_eq!(adams2(&Partition::empty(), 3), SchurExpansion::one());

    assert_eq!(
        sym_square(&part("1,1"), 4).unwrap(),
        expansion(&[("2,2", 1), ("1,1,1,1", 1)])
    );
    for k in 0..5u32 {
        let want = SchurExpansion::from_terms(
            (0..=k)
                .filter(|i| i % 2 == 0)
                .map(|i| (Partition::new(vec![2 * k - i, i]).unwrap(), BigInt::from(1))),
        );
        assert_eq!(sym_square(&Partition::rectangle(k, 1), 2).unwrap(), want);
    }
    assert_eq!(
        sym_square(&Partition::empty(), 3).unwrap(),
        SchurExpansion::one()
    );

    assert_eq!(
        alt_square(&part("1,1"), 4).unwrap(),
        expansion(&[("2,1,1", 1)])
    );
    assert_eq!(alt_square(&part("1"), 3).unwrap(), expansion(&[("1,1", 1)]));
    assert!(alt_square(&Partition::empty(), 3).unwrap().is_zero());
}

#[test]
fn expansion_text() {
    let e = expansion(&[("2,2", 1), ("2,1,1", -1), ("1,1,1,1", 1)]);
    assert_eq!(e.to_string(), "1·[2,2] −1·[2,1,1] 1·[1,1,1,1]");
}

#[test]
fn lr_coefficients() {
    let s11 = part("1,1");
    assert_eq!(
        lr_coefficient(&s11, &s11, &part("2,2")),
        BigUint::from(1u32)
    );
    assert_eq!(
        lr_coefficient(&s11, &s11, &part("3,1")),
        BigUint::from(0u32)
    );
    let mu = part("3,2,2,1");
    assert_eq!(
        lr_coefficient(&Partition::empty(), &mu, &mu),
        BigUint::from(1u32)
    );
}

#[test]
fn rectangle_squares() {
    let comps = rect_square_closed_form(2, 2, 1).unwrap();
    let got: Vec<(Partition, Vec<u32>)> = comps
        .iter()
        .map(|c| (c.partition.clone(), c.i.clone()))
        .collect();
    assert_eq!(
        got,
        vec![
            (part("2,2"), vec![0, 0]),
            (part("2,1,1"), vec![1, 0]),
            (part("1,1,1,1"), vec![0, 1]),
        ]
    );
    for p in 1..5 {
        for k in 0..4u32 {
            let got: Vec<Partition> = rect_square_closed_form(p, 1, k)
                .unwrap()
                .into_iter()
                .map(|c| c.partition)
                .collect();
            let want: Vec<Partition> = (0..=k)
                .map(|i| Partition::new(vec![2 * k - i, i]).unwrap())
                .collect();
            assert_eq!(got, want);
        }
    }
    let trivial = rect_square_closed_form(3, 2, 0).unwrap();
    assert_eq!(trivial.len(), 1);
    assert!(trivial[0].partition.is_empty());
    assert!(rect_square_closed_form(2, 3, 1).is_err());
}

#[test]
fn witness() {
    let r = verify_lr_rules_witness(2, 2, 1).unwrap();
    assert!(r.ok());
    assert_eq!(r.fillings, 3);
    assert_eq!(
        verify_lr_rules_witness(3, 2, 2).unwrap().parameters.len(),
        6
    );
    let r = verify_lr_rules_witness(4, 1, 1).unwrap();
    assert_eq!(r.fillings, 2);
    assert_eq!(r.parameters, vec![vec![0], vec![1]]);
}

#[test]
fn center_weights() {
    for (p, q, k) in [(2, 2, 1), (3, 2, 2), (4, 1, 3)] {
        let top = partition_to_fund(&Partition::rectangle(2 * k, q), p + q).unwrap();
        assert_eq!(
            center_weight_of_component(&top, p, q).unwrap(),
            CenterWeight::integer(-2 * k as i64)
        );
        let mut j = vec![0; q];
        j[q - 1] = 1;
        let skew = RectSquareComponent::from_j(p, q, k, &j).unwrap();
        let want = w(
            -2 * k as i64 * (p * q) as i64 + (p + q) as i64,
            (p * q) as i64,
        );
        assert_eq!(center_weight_of_component(&skew.fund, p, q).unwrap(), want);
    }
    let mut j0 = vec![0; 2];
    j0[0] = 1;
    let c = RectSquareComponent::from_j(3, 2, 2, &j0).unwrap();
    assert_eq!(
        center_weight_of_component(&c.fund, 3, 2).unwrap(),
        w(-4, 1) + w(1, 1) + w(2, 3)
    );

    assert_eq!(
        lowest_weight_closed_form(&[0, 0], 3, 2, 2).unwrap(),
        w(-4, 1)
    );
    assert_eq!(
        lowest_weight_closed_form(&[0, 1], 3, 2, 1).unwrap(),
        w(-2, 1) + w(5, 6)
    );
    assert_eq!(
        lowest_weight_closed_form(&[1, 0, 0], 3, 3, 1).unwrap(),
        w(0, 1)
    );

    assert_eq!(gs_threshold(2, 2, 1).unwrap(), w(-1, 1));
    assert_eq!(gs_threshold(3, 2, 1).unwrap(), w(-7, 6));
    assert_eq!(gs_threshold(3, 2, 0).unwrap(), w(5, 6));
}

#[test]
fn oracle_pairing() {
    assert_eq!(
        lowest_weight_pairing(&Partition::rectangle(4, 2), 3, 2).unwrap(),
        w(-4, 1)
    );
    assert_eq!(
        lowest_weight_pairing(&part("2,1,1"), 2, 2).unwrap(),
        w(-1, 1)
    );
    assert_eq!(
        lowest_weight_pairing(&part("1,1,1,1"), 2, 2).unwrap(),
        w(0, 1)
    );
}

#[test]
fn classification() {
    let rows: Vec<(Partition, Parity, BigUint, CenterWeight, bool)> = classify_components(2, 2, 1)
        .unwrap()
        .into_iter()
        .map(|r| {
            (
                r.component.partition,
                r.parity,
                r.dimension,
                r.center_weight,
                r.passes_gs_filter,
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            (part("2,2"), Parity::Symmetric, 20u32.into(), w(-2, 1), true),
            (
                part("2,1,1"),
                Parity::Antisymmetric,
                15u32.into(),
                w(-1, 1),
                true
            ),
            (
                part("1,1,1,1"),
                Parity::Symmetric,
                1u32.into(),
                w(0, 1),
                false
            ),
        ]
    );
}

#[test]
fn intersections() {
    assert_eq!(gs_intersection_sym(2, 2, 1).unwrap(), vec![part("2,2")]);
    assert_eq!(gs_intersection_sym(3, 2, 2).unwrap(), vec![part("4,4")]);
    for p in 1..6 {
        assert_eq!(gs_intersection_sym(p, 1, 1).unwrap(), vec![part("2")]);
    }
    assert_eq!(
        gs_v0v0_intersection_sym(2, 2, 1).unwrap(),
        vec![part("2,2")]
    );
    assert_eq!(
        gs_v0v0_intersection_sym(3, 2, 1).unwrap(),
        vec![part("2,2")]
    );
    for k in 1..4u32 {
        assert_eq!(
            gs_v0v0_intersection_sym(3, 1, k).unwrap(),
            vec![Partition::rectangle(2 * k, 1)]
        );
    }
}

#[test]
fn moduli_values() {
    let r = moduli_report(2, 2, 1).unwrap();
    assert_eq!(r.dim_vk, BigInt::from(1));
    assert_eq!(r.n_target, BigInt::from(-1));
    assert!(r.flags.routes_agree && r.flags.gs_singleton && !r.flags.skew_label_matches);
    assert!(r.notes.iter().any(|n| n.contains("no target quadric")));
    for p in 1..=5 {
        assert_eq!(moduli_report(p, 1, 1).unwrap().dim_vk, BigInt::from(0));
    }
    for k in 0..=5i64 {
        assert_eq!(
            moduli_report(1, 1, k as u32).unwrap().dim_vk,
            BigInt::from(k * (k - 1) / 2)
        );
    }
}

#[test]
fn equal_pq() {
    let r = equal_pq_report(2, 1).unwrap();
    assert_eq!(r.report.dim_vk, BigInt::from(1));
    assert!(r.notes.iter().any(|n| n.contains("one-parameter family")));
    assert!(r.checks.iter().all(|c| c.ok()));
    assert_eq!(
        equal_pq_report(1, 1).unwrap().report.dim_vk,
        BigInt::from(0)
    );
    let r = equal_pq_report(2, 0).unwrap();
    assert_eq!(r.report.dim_vk, BigInt::from(0));
    assert_eq!(rect_square_closed_form(2, 2, 0).unwrap().len(), 1);
}

#[test]
fn oracle_examples() {
    let s1 = schur_poly(&part("1"), 2).unwrap();
    let x = MonomialPoly::var(2, 0).add(&MonomialPoly::var(2, 1));
    assert_eq!(s1, x);
    assert_eq!(
        schur_poly(&part("1,1"), 4).unwrap().eval_ones(),
        BigInt::from(6)
    );
    assert_eq!(
        schur_poly(&part("2,2"), 4).unwrap().eval_ones(),
        BigInt::from(20)
    );
    assert!(schur_poly(&part("1,1,1"), 2).unwrap().is_zero());

    assert_eq!(
        to_schur_basis(&schur_poly(&part("2,1"), 3).unwrap()).unwrap(),
        expansion(&[("2,1", 1)])
    );
    let s11 = schur_poly(&part("1,1"), 4).unwrap();
    assert_eq!(
        to_schur_basis(&s11.mul(&s11).unwrap()).unwrap(),
        expansion(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", 1)])
    );
    assert_eq!(
        to_schur_basis(&square_vars(&schur_poly(&part("1"), 3).unwrap())).unwrap(),
        expansion(&[("2", 1), ("1,1", -1)])
    );
    assert_eq!(
        to_schur_basis(&square_vars(&s11)).unwrap(),
        expansion(&[("2,2", 1), ("2,1,1", -1), ("1,1,1,1", 1)])
    );
    let one = MonomialPoly::one(3);
    assert_eq!(square_vars(&one), one);
    assert_eq!(
        square_vars(&x),
        MonomialPoly::var(2, 0)
            .mul(&MonomialPoly::var(2, 0))
            .unwrap()
            .add(
                &MonomialPoly::var(2, 1)
                    .mul(&MonomialPoly::var(2, 1))
                    .unwrap()
            )
    );
    assert!(to_schur_basis(&MonomialPoly::var(2, 0)).is_err());
}
