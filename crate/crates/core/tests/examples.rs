// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

use unum::alu::{AluState, Command, Instruction, Response, IMEM_SIZE};
use unum::{
    add, contains, decode, encode_exact, encode_tight, expand, negate, optimize, pack, sub, unify, unpack,
    Dyadic, Environment, ExtendedReal, GeneralInterval, PackedUbound, PackedUnum, RegisterImage,
};

fn e22() -> Environment {
    Environment::new(2, 2).unwrap()
}

fn e45() -> Environment {
    Environment::new(4, 5).unwrap()
}

fn fin(m: i64, e: i64) -> ExtendedReal {
    Dyadic::new(m, e).into()
}

fn point(m: i64, e: i64) -> GeneralInterval {
    GeneralInterval::point(fin(m, e))
}

fn open(lo: ExtendedReal, hi: ExtendedReal) -> GeneralInterval {
    GeneralInterval::open(lo, hi).unwrap()
}

fn exact(v: i64, env: Environment) -> PackedUbound {
    encode_tight(&point(v, 0), env)
}

#[test]
fn decode_zero_pattern() {
    for env in Environment::all() {
        assert_eq!(decode(&PackedUnum::zero(env)), point(0, 0));
    }
}

#[test]
fn decode_three_and_its_ulp() {
    let three = PackedUnum::new(e22(), false, 1, 1, 1, 1, false).unwrap();
    assert_eq!(decode(&three), point(3, 0));
    let above = PackedUnum::new(e22(), false, 1, 1, 1, 1, true).unwrap();
    assert_eq!(decode(&above), open(fin(3, 0), fin(4, 0)));
}

#[test]
fn encode_exact_cases() {
    let u = encode_exact(&fin(3, -1), e45()).unwrap().unwrap();
    assert!(u.is_exact());
    assert_eq!(decode(&u), point(3, -1));

    assert_eq!(encode_exact(&fin(1, -100_000), e22()).unwrap(), None);

    let inf = encode_exact(&ExtendedReal::PosInf, e22()).unwrap().unwrap();
    assert_eq!((inf.es(), inf.fs(), inf.exponent(), inf.fraction(), inf.ubit()), (4, 4, 15, 15, false));
    assert!(inf.is_infinite());

    assert!(encode_exact(&ExtendedReal::NaN, e22()).is_err());
}

#[test]
fn encode_tight_cases() {
    let three = encode_tight(&point(3, 0), e22());
    assert!(!three.is_pair());
    assert!(three.first().is_exact());

    // 1/3 is not dyadic, so bracket it by dyadics that share its tightest cell.
    let lo = Dyadic::new(0x5555, -16);
    let hi = Dyadic::new(0x5556, -16);
    let near_third = GeneralInterval::closed(lo, hi).unwrap();
    let cell = encode_tight(&near_third, e22());
    assert!(!cell.is_pair());
    assert!(cell.first().ubit());
    assert!(contains(&cell.decode(), &near_third));

    let range = encode_tight(&GeneralInterval::closed(3.into(), 5.into()).unwrap(), e22());
    assert!(range.is_pair());
    assert!(range.first().is_exact() && range.second().unwrap().is_exact());
    assert_eq!(range.decode(), GeneralInterval::closed(3.into(), 5.into()).unwrap());
}

#[test]
fn unpack_summary_bits() {
    assert!(unpack(&PackedUnum::zero(e22())).summary.zero);
    assert!(unpack(&PackedUnum::nan(e22())).summary.nan);
    let u = unpack(exact(3, e45()).first());
    assert_eq!(pack(&u, e45()).unwrap(), *exact(3, e45()).first());
}

#[test]
fn expand_keeps_value() {
    let env = e22();
    let three = unpack(exact(3, env).first());
    let wide = expand(&three, env).unwrap();
    assert_eq!((wide.es, wide.fs), (4, 4));
    assert_eq!(decode(&pack(&wide, env).unwrap()), point(3, 0));
    assert_eq!(expand(&wide, env).unwrap(), wide);

    let tiny = PackedUnum::new(env, false, 4, 4, 0, 1, false).unwrap();
    let grown = expand(&unpack(&tiny), env).unwrap();
    assert_eq!((grown.es, grown.fs), (4, 4));
    assert_eq!(decode(&pack(&grown, env).unwrap()), decode(&tiny));
}

#[test]
fn add_cases() {
    let env = e22();
    assert_eq!(add(&exact(1, env), &exact(2, env)).unwrap(), exact(3, env));

    let maxreal = exact(480, env);
    let sum = add(&maxreal, &maxreal).unwrap();
    assert!(!sum.is_pair());
    assert_eq!(sum.decode(), open(fin(480, 0), ExtendedReal::PosInf));

    let inf = encode_tight(&GeneralInterval::point(ExtendedReal::PosInf), env);
    assert!(add(&inf, &negate(&inf)).unwrap().is_nan());
}

#[test]
fn sub_cases() {
    let env = e22();
    let x = encode_tight(&GeneralInterval::closed(Dyadic::new(5, -1), 3.into()).unwrap(), env);
    assert_eq!(sub(&x, &exact(0, env)).unwrap(), optimize(&x));
    assert_eq!(sub(&exact(3, env), &exact(3, env)).unwrap(), exact(0, env));

    let cell = encode_tight(&open(fin(3, 0), fin(4, 0)), env);
    let want = encode_tight(&open(fin(2, 0), fin(3, 0)), env);
    assert_eq!(sub(&cell, &exact(1, env)).unwrap(), want);
}

#[test]
fn negate_three() {
    assert_eq!(negate(&exact(3, e22())), exact(-3, e22()));
}

#[test]
fn optimize_cases() {
    let env = e22();
    let padded = PackedUnum::new(env, false, 2, 4, 2, 4, false).unwrap();
    assert_eq!(decode(&padded), point(5, -1));
    let slim = optimize(&PackedUbound::single(padded));
    assert_eq!(slim.first().fs(), 2);
    assert_eq!(slim.decode(), point(5, -1));

    let three = *exact(3, env).first();
    assert_eq!(optimize(&PackedUbound::pair(three, three).unwrap()), exact(3, env));
    assert_eq!(optimize(&exact(3, env)), exact(3, env));
}

#[test]
fn unify_cases() {
    let env = e22();
    let three = *exact(3, env).first();
    assert_eq!(unify(&PackedUbound::pair(three, three).unwrap()), exact(3, env));

    // 3 is a lattice point of every format, so no single unum spans it.
    let across = encode_tight(&open(fin(5, -1), fin(7, -1)), env);
    let u = unify(&across);
    assert!(contains(&u.decode(), &across.decode()));
    assert_eq!(u, optimize(&across));

    let inside = encode_tight(&open(fin(9, -2), fin(11, -2)), env);
    let u = unify(&inside);
    assert!(!u.is_pair());
    assert_eq!(u.decode(), open(fin(2, 0), fin(3, 0)));
}

#[test]
fn alu_scripts() {
    let env = e45();
    let img = |v| RegisterImage::from_ubound(&exact(v, env));
    let mut alu = AluState::new(env);
    let script = format!("WR r1 {}\nWR r2 {}\nWI 0 UADD r3,r1,r2\nRUN 1\nRR r3\n", img(1), img(2));
    assert_eq!(alu.run_script(&script).unwrap(), vec![Response { reg: 3, image: img(3) }]);

    let mut alu = AluState::new(env);
    alu.exec_command(&Command::WriteInstruction { addr: IMEM_SIZE - 1, instr: Instruction::NOP }).unwrap();
    let before = *alu.registers();
    alu.exec_command(&Command::Run { times: 1 }).unwrap();
    assert_eq!(alu.registers(), &before);
    assert_eq!(alu.pc(), 0);

    assert!(AluState::new(env).run_script(&format!("WI {IMEM_SIZE} NOP\n")).is_err());
    assert!(AluState::new(env).run_script("RR r32\n").is_err());
    let mut empty = AluState::new(env);
    empty.run_script("RUN 3\n").unwrap();
    assert_eq!(empty.cycles(), 0);
}
