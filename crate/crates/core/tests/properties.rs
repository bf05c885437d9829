// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;

use unum::{
    add, contains, encode_tight, interval_add, interval_neg, negate, optimize, pack, sub, unify, unpack,
    Environment, PackedUbound, PackedUnum, RegisterImage,
};

fn unum_in(env: Environment) -> impl Strategy<Value = PackedUnum> {
    (1..=env.max_es(), 1..=env.max_fs()).prop_flat_map(move |(es, fs)| {
        (any::<bool>(), 0..(1u32 << es), 0..(1u64 << fs), any::<bool>())
            .prop_map(move |(sign, e, f, ubit)| PackedUnum::new(env, sign, es, fs, e, f, ubit).unwrap())
    })
}

fn ubound_in(env: Environment) -> impl Strategy<Value = PackedUbound> {
    prop_oneof![
        unum_in(env).prop_map(PackedUbound::single),
        (unum_in(env), unum_in(env))
            .prop_filter_map("ends out of order", |(a, b)| PackedUbound::pair(a, b).ok()),
    ]
}

fn env_strategy() -> impl Strategy<Value = Environment> {
    prop_oneof![Just((2, 2)), Just((3, 4)), Just((4, 5))].prop_map(|(a, b)| Environment::new(a, b).unwrap())
}

fn two_ubounds() -> impl Strategy<Value = (PackedUbound, PackedUbound)> {
    env_strategy().prop_flat_map(|env| (ubound_in(env), ubound_in(env)))
}

fn one_ubound() -> impl Strategy<Value = PackedUbound> {
    env_strategy().prop_flat_map(ubound_in)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn unpack_pack_roundtrip(u in env_strategy().prop_flat_map(unum_in)) {
        prop_assert_eq!(pack(&unpack(&u), u.env()).unwrap(), u);
        prop_assert_eq!(PackedUnum::from_bits(u.env(), u.bits(), u.bit_len()).unwrap(), u);
    }

    #[test]
    fn register_image_roundtrip(x in one_ubound()) {
        let img = RegisterImage::from_ubound(&x);
        prop_assert_eq!(img.to_ubound(x.env()).unwrap(), x);
        prop_assert_eq!(img.to_string().parse::<RegisterImage>().unwrap(), img);
    }

    #[test]
    fn encode_tight_is_identity_on_representable(x in one_ubound()) {
        let g = x.decode();
        prop_assert_eq!(encode_tight(&g, x.env()).decode(), g);
    }

    #[test]
    fn add_contains_exact_sum((x, y) in two_ubounds()) {
        let got = add(&x, &y).unwrap();
        prop_assert!(contains(&got.decode(), &interval_add(&x.decode(), &y.decode())));
        prop_assert_eq!(&got, &add(&y, &x).unwrap());
        prop_assert_eq!(optimize(&got), got);
    }

    #[test]
    fn sub_is_add_of_negation((x, y) in two_ubounds()) {
        prop_assert_eq!(sub(&x, &y).unwrap(), add(&x, &negate(&y)).unwrap());
    }

    #[test]
    fn negate_mirrors(x in one_ubound()) {
        prop_assert_eq!(negate(&x).decode(), interval_neg(&x.decode()));
        // Exact -0 comes back as +0, so compare after one flip.
        let once = negate(&x);
        prop_assert_eq!(negate(&negate(&once)), once);
    }

    #[test]
    fn optimize_is_lossless(x in one_ubound()) {
        let o = optimize(&x);
        prop_assert_eq!(o.decode(), x.decode());
        prop_assert!(o.bit_len() <= x.bit_len());
        prop_assert_eq!(optimize(&o), o);
    }

    #[test]
    fn unify_contains(x in one_ubound()) {
        let u = unify(&x);
        prop_assert!(contains(&u.decode(), &x.decode()));
        prop_assert!(u.bit_len() <= optimize(&x).bit_len());
        prop_assert_eq!(unify(&u), u);
    }
}
