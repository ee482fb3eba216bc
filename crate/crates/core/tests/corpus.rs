use std::time::Instant;

use lctop::corpus::four_planes;
use lctop::realize::verify_choice;
use lctop::{
    att_top, combine_intersection, enumerate_all, realize_subset, reduce_to_dim1, AttachedSet, Ideal, RealizeOptions,
};

#[test]
fn every_named_ideal_has_its_attached_set() {
    let c = four_planes();
    for named in &c.ideals {
        let got = att_top(&named.ideal, &c.module).unwrap();
        assert_eq!(c.names_of(&got), named.expected, "{}", named.name);
    }
}

#[test]
fn every_subset_round_trips() {
    let c = four_planes();
    let start = Instant::now();
    for mask in 0..16u64 {
        let target = AttachedSet::from_mask(mask);
        let rep = realize_subset(&target, &c.module, &RealizeOptions::default()).unwrap();
        assert_eq!(att_top(&rep.ideal, &c.module).unwrap(), target);
        if mask != 0 && mask != 15 {
            assert_eq!(rep.ideal.dim_quotient().unwrap().value(), 1, "{target}");
        }
        for choice in &rep.choices {
            assert!(verify_choice(choice, &target, &c.module).unwrap());
        }
    }
    eprintln!("round trip: {:?}", start.elapsed());
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let c = four_planes();
    let seq = enumerate_all(&c.module, &RealizeOptions::default()).unwrap();
    let par = enumerate_all(
        &c.module,
        &RealizeOptions {
            parallel: true,
            ..RealizeOptions::default()
        },
    )
    .unwrap();
    assert_eq!(seq.distinct, 16);
    for (a, b) in seq.rows.iter().zip(par.rows.iter()) {
        assert_eq!(a.target, b.target);
        assert_eq!(a.ideal.canonical().unwrap(), b.ideal.canonical().unwrap());
    }
}

#[test]
fn pairwise_intersection_law() {
    let c = four_planes();
    let start = Instant::now();
    let opts = RealizeOptions::default();
    for (i, a) in c.ideals.iter().enumerate() {
        for b in &c.ideals[i + 1..] {
            let both = a.ideal.intersect(&b.ideal).unwrap();
            let expected = att_top(&a.ideal, &c.module)
                .unwrap()
                .intersection(&att_top(&b.ideal, &c.module).unwrap());
            assert_eq!(att_top(&both, &c.module).unwrap(), expected, "{} {}", a.name, b.name);
            let combined = combine_intersection(&a.ideal, &b.ideal, &c.module, &opts).unwrap();
            assert_eq!(combined.attached, expected);
        }
    }
    eprintln!("intersection law: {:?}", start.elapsed());
}

#[test]
fn reductions_keep_attached_set() {
    let c = four_planes();
    let opts = RealizeOptions::default();
    let mut inputs: Vec<Ideal> = c.ideals.iter().map(|n| n.ideal.clone()).collect();
    inputs.push(Ideal::maximal(&c.ring));
    for a in &inputs {
        let b = reduce_to_dim1(a, &c.module, &opts).unwrap();
        assert_eq!(att_top(&b, &c.module).unwrap(), att_top(a, &c.module).unwrap());
        assert!(b.dim_quotient().unwrap().value() <= 1);
    }
}

#[test]
fn monotone_under_containment() {
    let c = four_planes();
    for a in &c.ideals {
        for b in &c.ideals {
            if a.ideal.leq(&b.ideal).unwrap() {
                let (ta, tb) = (
                    att_top(&a.ideal, &c.module).unwrap(),
                    att_top(&b.ideal, &c.module).unwrap(),
                );
                assert!(ta.is_subset(&tb), "{} ⊆ {}", a.name, b.name);
            }
        }
    }
}
