from inhabit.cli import bundled_problems
from inhabit.frontend import elaborate, parse

CORPUS = sorted(bundled_problems().glob("*.dtt"))
SHOWCASE = ("eq_trans", "succ_le_succ", "transgen_lift", "cantor")

# Known proofs of two showcase theorems, in this package's encodings.
CANTOR_PROOF = (
    "fun A f f_inv Eq Not False f_surj P_ne_Not_P => P_ne_Not_P "
    "(f (f_inv (fun a => Not (f a a))) (f_inv (fun a => Not (f a a)))) "
    "(f_surj (fun a => Not (f a a)) (f_inv (fun a => Not (f a a))))"
)
EQ_TRANS_PROOF = (
    "fun α Eq Eq_refl Eq_rec a b c h₁ h₂ => Eq_rec b (fun a_1 t => Eq a a_1) h₁ c h₂"
)


def load(name):
    path = bundled_problems() / f"{name}.dtt"
    return parse(path.read_text(encoding="utf-8"), name=name)


def elab_text(text):
    return elaborate(parse(text))


def parse_type(text):
    from inhabit.frontend.parser import Parser

    return Parser(text).parse_type_required()


def add(e, term_text, type_text):
    """Allocate a closed term in ``e``'s store; returns it as a Term."""
    from inhabit.frontend import add_term, parse_term
    from inhabit.syntax import Term

    m = add_term(e, parse_term(term_text), parse_type(type_text))
    return Term(m, e.global_es)


def pure_call(func, *args, timeout=600):
    """Run ``probes.<func>(*args)`` under the pure-Python kernel; returns its
    JSON-decoded result."""
    import json
    import os
    import subprocess
    import sys
    from pathlib import Path

    here = Path(__file__).parent
    env = dict(os.environ, INHABIT_PURE="1")
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(here), env.get("PYTHONPATH")]))
    code = (f"import json, probes; "
            f"print(json.dumps(probes.{func}(*json.loads({json.dumps(json.dumps(args))}))))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, timeout=timeout)
    if out.returncode:
        raise RuntimeError(out.stderr)
    return json.loads(out.stdout.strip().splitlines()[-1])
