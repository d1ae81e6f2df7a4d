#!/usr/bin/env python3
"""Generate the bundled desk corpus: synthetic railway-counter enquiries.

Writes data/train.tsv, data/test.tsv and data/lexicon.tsv. Every token is
annotated with basic category, abstract group, phrase-start bit and keep bit.
The keep bits are checked against a direct re-implementation of the
deletion/repair rules on the gold tags, so a mismatch can only come from an
utterance deliberately marked as a known non-adjacent repair.

Usage: scripts/gen_desk_corpus.py [--seed N] [--out data]
"""

import argparse
import random
from pathlib import Path

CITIES = ["Regensburg", "Dortmund", "Koeln", "Hamburg", "Muenchen", "Berlin", "Bonn",
          "Frankfurt", "Nuernberg", "Passau", "Hannover", "Stuttgart", "Mainz", "Augsburg"]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
DAYPARTS = ["morning", "evening", "afternoon"]
NUMS = ["one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
        "eleven", "twelve"]
NOISES = ["[eh]", "[mm]", "[ts]", "[hm]", "[u]", "[ah]"]

LEXICON = {
    # determiners, pronouns, conjunctions
    "a": "D", "an": "D", "the": "D", "this": "D", "that": "D,U,C",
    "I": "U", "you": "U", "it": "U", "there": "U", "we": "U", "me": "U",
    "and": "C", "or": "C", "but": "C",
    # adverbs
    "yeah": "A", "yes": "A", "no": "A", "okay": "A", "when": "A", "where": "A",
    "how": "A", "not": "A", "also": "A", "only": "A", "just": "A",
    "morning": "A,N", "evening": "A,N", "afternoon": "A,N",
    # adjectives
    "next": "J", "first": "J,M", "last": "J", "direct": "J", "cheap": "J",
    "early": "J,A", "late": "J,A", "fast": "J", "second": "J,M", "at_least": "J",
    # prepositions
    "from": "R", "to": "R", "via": "R", "in": "R", "at": "R", "on": "R", "with": "R",
    "after": "R", "before": "R", "until": "R", "around": "R,A", "for": "R",
    # verbs
    "need": "V", "want": "V", "leaves": "V,N", "leave": "V", "arrives": "V", "arrive": "V",
    "departs": "V", "take": "V", "get": "V", "would": "V", "like": "V,R", "book": "V,N",
    "change": "V,N", "stop": "V,N", "go": "V", "have": "V", "is": "V", "does": "V",
    "do": "V", "please": "V", "goes": "V",
    # nouns
    "train": "N", "trains": "N", "ticket": "N", "tickets": "N", "connection": "N",
    "hours": "N", "time": "N", "platform": "N", "seat": "N", "class": "N", "trip": "N",
    "minutes": "N", "oclock": "N", "fare": "N", "return": "N,V", "noon": "N",
}
for w in CITIES + DAYS:
    LEXICON[w] = "N"
for w in NUMS:
    LEXICON[w] = "M,U" if w == "one" else "M"


class Utt:
    """Sequence of phrases; each phrase is a list of [surface, basic, abstract, start, keep]."""

    def __init__(self):
        self.tokens = []
        self.known_failure = False

    def add(self, phrase, keep=1):
        for tok in phrase:
            self.tokens.append([tok[0], tok[1], tok[2], tok[3], keep])


def tok(w, b, a, s):
    return (w, b, a, s)


def phrase(words, group):
    return [tok(w, b, group, 1 if i == 0 else 0) for i, (w, b) in enumerate(words)]


# --- phrase builders -------------------------------------------------------

def mg(r):
    return phrase([(r.choice(["yeah", "yes", "okay", "yeah", "no"]), "A")], "MG")


def ng_pron(r, p=None):
    return phrase([(p or r.choice(["I", "we"]), "U")], "NG")


def ng_np(r, nouns=("train", "ticket", "connection")):
    words = [(r.choice(["a", "the", "a"]), "D")]
    if r.random() < 0.35:
        words.append((r.choice(["direct", "cheap", "fast", "early", "next"]), "J"))
    words.append((r.choice(nouns), "N"))
    return phrase(words, "NG")


def ng_num(r):
    return phrase([(r.choice(NUMS[1:5]), "M"), ("tickets", "N")], "NG")


def vg(*verbs):
    return phrase([(v, "V") for v in verbs], "VG")


def pg_city(r, prep=None, city=None):
    return phrase([(prep or r.choice(["from", "to", "via"]), "R"), (city or r.choice(CITIES), "N")], "PG")


def pg_day(r, prep=None, day=None, part=None):
    words = [(prep or r.choice(["on", "at"]), "R"), (day or r.choice(DAYS), "N")]
    if part:
        words.append((part, "A"))
    return phrase(words, "PG")


def pg_time(r, prep=None):
    words = [(prep or r.choice(["at", "after", "before", "around", "until"]), "R"),
             (r.choice(NUMS), "M")]
    if r.random() < 0.4:
        words.append(("oclock", "N"))
    return phrase(words, "PG")


def pg_daypart(r):
    return phrase([("in", "R"), ("the", "D"), (r.choice(DAYPARTS), "N")], "PG")


def pg_least(r):
    words = [("with", "R"), ("at_least", "J"), (r.choice(NUMS[1:6]), "M"), ("hours", "N")]
    if r.random() < 0.5:
        words.append(("time", "N"))
    return phrase(words, "PG")


def pg_class(r):
    return phrase([("in", "R"), ("the", "D"), (r.choice(["first", "second"]), "J"), ("class", "N")], "PG")


def pps(r, lo=1, hi=4):
    """Route/time prepositional groups without accidental repeated starts."""
    pool = []
    cities = r.sample(CITIES, 3)
    pool.append(pg_city(r, "from", cities[0]))
    pool.append(pg_city(r, "to", cities[1]))
    if r.random() < 0.4:
        pool.append(pg_city(r, "via", cities[2]))
    if r.random() < 0.5:
        day = r.choice(DAYS)
        part = r.choice(DAYPARTS) if r.random() < 0.5 else None
        pool.append(pg_day(r, r.choice(["on", "at"]), day, part))
    if r.random() < 0.4:
        pool.append(pg_time(r))
    if r.random() < 0.15:
        pool.append(pg_daypart(r))
    if r.random() < 0.15:
        pool.append(pg_least(r))
    n = r.randint(lo, min(hi, len(pool)))
    if n == 1:
        return [r.choice(pool[:2])]
    extra = sorted(r.sample(range(2, len(pool)), n - 2))
    return pool[:2] + [pool[i] for i in extra]


# --- utterance templates ---------------------------------------------------

def t_need(r):
    ph = []
    if r.random() < 0.4:
        ph.append(mg(r))
    ph += [ng_pron(r), vg(r.choice(["need", "want"])), ng_np(r)]
    return ph + pps(r, 1, 4)


def t_would_like(r):
    ph = []
    if r.random() < 0.3:
        ph.append(mg(r))
    ph += [ng_pron(r, "I"), vg("would", "like"), ng_np(r, ("ticket", "seat", "connection", "return"))]
    return ph + pps(r, 1, 3)


def t_when_leaves(r):
    ph = [phrase([("when", "A")], "MG")]
    if r.random() < 0.5:
        ph += [vg("does"), ng_np(r, ("train",)), vg(r.choice(["leave", "arrive"]))]
    else:
        ph += [vg("leaves", "please") if r.random() < 0.5 else vg("leaves"), ng_np(r, ("train",))]
    return ph + pps(r, 1, 3)


def t_is_there(r):
    ph = [vg("is"), ng_pron(r, "there"), ng_np(r, ("connection", "train"))]
    return ph + pps(r, 1, 3)


def t_arrive(r):
    ph = [phrase([("when", "A")], "MG"), vg("does"), ng_pron(r, "it"), vg("arrive"),
          pg_city(r, "in")]
    if r.random() < 0.4:
        ph.append(pg_time(r))
    return ph


def t_stop(r):
    ph = [vg("does"), ng_pron(r, "it"), vg("stop"), pg_city(r, "in")]
    if r.random() < 0.3:
        ph.append(pg_time(r, "around"))
    return ph


def t_leaves_at(r):
    ph = [ng_np(r, ("train", "connection")), vg(r.choice(["leaves", "departs", "goes"]))]
    cand = [pg_time(r, "at"), pg_day(r, "on", None, r.choice(DAYPARTS + [None]))]
    ph.append(r.choice(cand))
    if r.random() < 0.5:
        ph.append(pg_city(r, "from"))
    return ph


def t_seat(r):
    ph = [phrase([(r.choice(["yes", "okay"]), "A")], "MG"), vg("please"),
          ng_np(r, ("seat", "ticket")), pg_class(r)]
    return ph


def t_where_change(r):
    ph = [phrase([("where", "A")], "MG"), vg("do"), ng_pron(r, "I"), vg("change")]
    if r.random() < 0.5:
        ph.append(pg_city(r, "to"))
    return ph


def t_not_after(r):
    ph = [phrase([("no", "A")], "MG"), phrase([("not", "A")], "SG"), pg_time(r, "after")]
    return ph


def t_and_return(r):
    ph = [phrase([("and", "C")], "CG"), ng_np(r, ("return", "trip")), pg_day(r, "on")]
    if r.random() < 0.5:
        ph.append(pg_time(r))
    return ph


def t_two_tickets(r):
    ph = [ng_pron(r, "we"), vg(r.choice(["need", "want"])), ng_num(r)]
    return ph + pps(r, 1, 3)


TEMPLATES = [(t_need, 6), (t_would_like, 3), (t_when_leaves, 4), (t_is_there, 2),
             (t_arrive, 2), (t_stop, 1), (t_leaves_at, 2), (t_seat, 1), (t_where_change, 1),
             (t_not_after, 1), (t_and_return, 1), (t_two_tickets, 2)]


def noise(r):
    if r.random() < 0.65:
        return [tok(".", "-", "IG", 1)]
    out = [tok(r.choice(NOISES), "I", "IG", 1)]
    if r.random() < 0.4:
        out.append(tok(".", "-", "IG", 1))
    return out


def build_utterance(r, known_failure=False):
    tmpl = r.choices([t for t, _ in TEMPLATES], [w for _, w in TEMPLATES])[0]
    phrases = tmpl(r)
    u = Utt()

    # Phrase repair: a PG reparandum directly before a PG with the same start.
    repair_at = None
    pg_idx = [i for i, p in enumerate(phrases) if p[0][2] == "PG"]
    if pg_idx and r.random() < 0.2:
        repair_at = r.choice(pg_idx)
    # Word repetition on an NG opener.
    repeat_at = None
    ng_idx = [i for i, p in enumerate(phrases) if p[0][2] == "NG"]
    if ng_idx and r.random() < 0.12:
        repeat_at = r.choice(ng_idx)

    for i, p in enumerate(phrases):
        if i > 0 and r.random() < 0.22:
            u.add(noise(r), keep=0)
        if i == repair_at:
            rep = list(p)
            prep = rep[0][0]
            if len(rep) > 2 and r.random() < 0.5:
                rep = rep[:2]  # "at Monday" before "at Monday morning"
            elif rep[1][1] == "N" and rep[1][0] in CITIES:
                rep[1] = tok(r.choice([c for c in CITIES if c != rep[1][0]]), "N", "PG", 0)
            rep[0] = tok(prep, "R", "PG", 1)
            u.add(rep, keep=0)
            u.add(noise(r) if r.random() < 0.8 else [], keep=0)
        if i == repeat_at:
            u.add([p[0]], keep=0)
            p = [tok(p[0][0], p[0][1], p[0][2], 1)] + p[1:]
        # optional pause inside a day group before the day part
        if len(p) == 3 and p[0][2] == "PG" and p[2][1] == "A" and r.random() < 0.35:
            u.add(p[:2])
            u.add(noise(r), keep=0)
            u.add(p[2:])
            continue
        u.add(p)

    if known_failure:
        # "... not after . not before nine": the intended repair spans a
        # separating word, which the adjacency rule cannot see.
        u.add(noise(r), keep=0)
        u.add(phrase([("not", "A")], "SG"), keep=0)
        u.add(phrase([("after", "R")], "PG"), keep=0)
        u.add([tok(".", "-", "IG", 1)], keep=0)
        u.add(phrase([("not", "A")], "SG"))
        u.add(phrase([("before", "R"), (r.choice(NUMS), "M")], "PG"))
        u.known_failure = True
    return u


# --- rule check -------------------------------------------------------------

def expected_survivors(u):
    toks = [(i, t) for i, t in enumerate(u.tokens)]
    words = [(i, t) for i, t in toks if t[0] != "." and not t[0].startswith("[") and t[1] != "I"]
    reparanda = set()
    for k, (i, t) in enumerate(words):
        if k + 1 < len(words) and words[k + 1][1][0].lower() == t[0].lower():
            reparanda.add(i)
    chunks = []
    for i, t in words:
        if not chunks or t[3] == 1 or t[2] != chunks[-1][0][1][2]:
            chunks.append([(i, t)])
        else:
            chunks[-1].append((i, t))
    remaining = [[(i, t) for i, t in grp if i not in reparanda] for grp in chunks]
    remaining = [grp for grp in remaining if grp]
    keep = []
    for g, grp in enumerate(remaining):
        if g + 1 < len(remaining):
            nxt = remaining[g + 1][0][1]
            if nxt[2] == grp[0][1][2] and nxt[0].lower() == grp[0][1][0].lower():
                continue
        keep += [i for i, _ in grp]
    return keep


def gold_survivors(u):
    return [i for i, t in enumerate(u.tokens) if t[4] == 1]


def generate_split(r, count, target_words, failures=0, min_len=0):
    best = None
    for _ in range(400):
        utts = []
        fail_slots = set(r.sample(range(count), failures)) if failures else set()
        for k in range(count):
            # Retry until the rule check agrees with the intended gold.
            while True:
                u = build_utterance(r, known_failure=k in fail_slots)
                ok = expected_survivors(u) == gold_survivors(u)
                if ok != u.known_failure and len(u.tokens) >= min_len:
                    break
            utts.append(u)
        words = sum(len(u.tokens) for u in utts)
        if best is None or abs(words - target_words) < abs(best[1] - target_words):
            best = (utts, words)
        if abs(words - target_words) <= target_words * 0.02:
            break
    return best[0]


SAMPLE = [("Yeah", "A", "MG", 1), ("I", "U", "NG", 1), ("need", "V", "VG", 1), ("a", "D", "NG", 1),
        ("train", "N", "NG", 0), ("from", "R", "PG", 1), ("Regensburg", "N", "PG", 0),
        ("to", "R", "PG", 1), ("Dortmund", "N", "PG", 0), ("via", "R", "PG", 1),
        ("Koeln", "N", "PG", 0), (".", "-", "IG", 1), ("with", "R", "PG", 1),
        ("at_least", "J", "PG", 0), ("two", "M", "PG", 0), ("hours", "N", "PG", 0),
        ("time", "N", "PG", 0), ("in", "R", "PG", 1), ("Koeln", "N", "PG", 0)]
REPAIR = [("when", "A", "MG", 1, 1), ("leaves", "V", "VG", 1, 1), ("please", "V", "VG", 0, 1),
        (".", "-", "IG", 1, 0), ("[eh]", "I", "IG", 1, 0), ("a", "D", "NG", 1, 1),
        ("train", "N", "NG", 0, 1), (".", "-", "IG", 1, 0), ("from", "R", "PG", 1, 1),
        ("Regensburg", "N", "PG", 0, 1), ("to", "R", "PG", 1, 1), ("Dortmund", "N", "PG", 0, 1),
        (".", "-", "IG", 1, 0), ("at", "R", "PG", 1, 0), ("Monday", "N", "PG", 0, 0),
        ("[mm]", "I", "IG", 1, 0), ("[ts]", "I", "IG", 1, 0), ("[u]", "I", "IG", 1, 0),
        (".", "-", "IG", 1, 0), ("at", "R", "PG", 1, 1), ("Monday", "N", "PG", 0, 1),
        (".", "-", "IG", 1, 0), ("morning", "A", "PG", 0, 1)]


def sample_utts():
    u3 = Utt()
    for w, b, a, s in SAMPLE:
        u3.tokens.append([w, b, a, s, 0 if w == "." else 1])
    u4 = Utt()
    for w, b, a, s, k in REPAIR:
        u4.tokens.append([w, b, a, s, k])
    for u in (u3, u4):
        assert expected_survivors(u) == gold_survivors(u)
    return [u3, u4]


def write_split(path, utts, header):
    with open(path, "w") as f:
        f.write(header)
        for n, u in enumerate(utts):
            if n:
                f.write("\n")
            for w, b, a, s, k in u.tokens:
                f.write(f"{w}\t{b}\t{a}\t{s}\t{k}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1993)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    r = random.Random(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    train = sample_utts() + generate_split(r, 35, 394 - 42)
    test = generate_split(r, 58, 823, failures=3, min_len=11)
    r.shuffle(train)

    head = ("# Synthetic railway-enquiry desk corpus (generated by scripts/gen_desk_corpus.py,\n"
            f"# seed {args.seed}). Columns: surface basic abstract start keep\n")
    write_split(out / "train.tsv", train, head)
    write_split(out / "test.tsv", test, head)

    with open(out / "lexicon.tsv", "w") as f:
        f.write("# surface<TAB>candidate basic categories\n")
        for w in sorted(LEXICON, key=str.lower):
            f.write(f"{w}\t{LEXICON[w]}\n")

    for name, utts in (("train", train), ("test", test)):
        words = sum(len(u.tokens) for u in utts)
        print(f"{name}: {len(utts)} utterances, {words} words")


if __name__ == "__main__":
    main()
