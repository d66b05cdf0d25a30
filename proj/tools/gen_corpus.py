#!/usr/bin/env python3
"""Writes the bundled C-subset benchmark corpus.

Usage: gen_corpus.py OUTDIR

Output is deterministic for a given script version.
"""

import random
import sys
from pathlib import Path

PROJECTS = {
    "listkit": ["list", "queue", "stack", "iter", "sort", "util"],
    "mathlib": ["arith", "gcd", "poly", "stats", "bits"],
    "textproc": ["scan", "token", "buffer", "escape", "wordcount", "trim"],
    "netsim": ["packet", "router", "link", "clock", "sim", "table", "stats"],
}

STRUCT = """struct {s} {{
  int key;
  int value;
  char *label;
  struct {s} *next;
}};
"""


def linked_ops(s, p):
    return f"""
struct {s} *{p}_push(struct {s} *head, int key, int value) {{
  struct {s} *n = {p}_alloc();
  if (n == NULL) {{
    return head;
  }}
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}}

int {p}_length(struct {s} *head) {{
  int count = 0;
  while (head != NULL) {{
    count = count + 1;
    head = head->next;
  }}
  return count;
}}

struct {s} *{p}_find(struct {s} *head, int key) {{
  struct {s} *cur = head;
  while (cur != NULL) {{
    if (cur->key == key) {{
      return cur;
    }}
    cur = cur->next;
  }}
  return NULL;
}}

int {p}_value_or(struct {s} *head, int key, int fallback) {{
  struct {s} *hit = {p}_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {{
    return fallback;
  }}
  return hit->value;
}}
"""


def loop_fn(name, rng):
    bound = rng.randint(3, 40)
    step = rng.randint(1, 3)
    op = rng.choice(["+", "-", "*"])
    return f"""
int {name}(int n, int seed) {{
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + {step}) {{
    if (i % 2 == 0) {{
      acc = acc {op} i;
    }} else {{
      acc = acc - 1;
    }}
    if (acc > {bound * 100}) {{
      break;
    }}
    if (acc < 0 && i > {bound}) {{
      continue;
    }}
  }}
  return acc;
}}
"""


def nested_fn(name, rng):
    a = rng.randint(2, 9)
    return f"""
int {name}(int rows, int cols) {{
  int total = 0;
  int r = 0;
  while (r < rows) {{
    int c = 0;
    while (c < cols) {{
      total = total + (r * {a} + c) % 7;
      c = c + 1;
    }}
    r = r + 1;
  }}
  return total > 0 ? total : -total;
}}
"""


def branchy_fn(name, rng):
    k = rng.randint(1, 50)
    return f"""
int {name}(int x, int y) {{
  int result;
  // pick the larger, biased by {k}
  if (x > y || x == {k}) {{
    result = x - y;
  }} else if (y > {k} && !x) {{
    result = y + {k};
  }} else {{
    result = 0;
  }}
  return result;
}}
"""


def pointer_fn(name, s, p, rng):
    return f"""
int {name}(struct {s} *node, int *out) {{
  int *slot = out;
  if (node == NULL) {{
    return -1;
  }}
  *slot = node->value + {rng.randint(0, 9)};
  return {p}_length(node);
}}
"""


def string_fn(name, rng):
    ch = rng.choice("abcxyz")
    return f"""
int {name}(char *text, char *pattern) {{
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {{
    return 0;
  }}
  while (*cur) {{
    if (*cur == '{ch}') {{
      hits = hits + 1;
    }}
    cur = advance(cur, 1);
  }}
  log_count("{name}", hits);
  return hits;
}}
"""


def void_fn(name, p, rng):
    return f"""
void {name}(struct {p} *head) {{
  struct {p} *cur = head;
  while (cur != NULL) {{
    cur->value = cur->value * {rng.randint(2, 5)};
    cur = cur->next;
  }}
}}
"""


def globals_block(prefix, rng):
    return f"""
int {prefix}_limit = {rng.randint(10, 500)};
int {prefix}_errors;
char *{prefix}_name = "{prefix}";
"""


def main_fn(prefix, names):
    calls = "\n".join(f"  total = total + {n}({i + 1}, {i + 2});" for i, n in enumerate(names))
    return f"""
int {prefix}_main(int argc) {{
  int total = 0;
{calls}
  if (total > {prefix}_limit) {{
    {prefix}_errors = {prefix}_errors + 1;
  }}
  return total;
}}
"""


def generate_file(project, module, rng):
    s = f"{module}_node"
    p = f"{project}_{module}"
    parts = ["#include <stdlib.h>\n", f"/* {project}/{module}.c */\n", STRUCT.format(s=s)]
    parts.append(f"\nstruct {s} *{p}_alloc();\n")
    parts.append(globals_block(p, rng))
    parts.append(linked_ops(s, p))
    simple = []
    for i in range(rng.randint(2, 4)):
        kind = rng.choice(["loop", "nested", "branchy"])
        name = f"{p}_{kind}{i}"
        parts.append({"loop": loop_fn, "nested": nested_fn, "branchy": branchy_fn}[kind](name, rng))
        simple.append(name)
    parts.append(pointer_fn(f"{p}_fill", s, p, rng))
    parts.append(string_fn(f"{p}_count", rng))
    parts.append(void_fn(f"{p}_scale", s, rng))
    parts.append(main_fn(p, simple))
    return "".join(parts)


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    out = Path(sys.argv[1])
    rng = random.Random(20240101)
    for project, modules in PROJECTS.items():
        for module in modules:
            path = out / project / f"{module}.c"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(generate_file(project, module, rng))


if __name__ == "__main__":
    main()
