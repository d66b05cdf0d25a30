#include <stdlib.h>
/* mathlib/arith.c */
struct arith_node {
  int key;
  int value;
  char *label;
  struct arith_node *next;
};

struct arith_node *mathlib_arith_alloc();

int mathlib_arith_limit = 295;
int mathlib_arith_errors;
char *mathlib_arith_name = "mathlib_arith";

struct arith_node *mathlib_arith_push(struct arith_node *head, int key, int value) {
  struct arith_node *n = mathlib_arith_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int mathlib_arith_length(struct arith_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct arith_node *mathlib_arith_find(struct arith_node *head, int key) {
  struct arith_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int mathlib_arith_value_or(struct arith_node *head, int key, int fallback) {
  struct arith_node *hit = mathlib_arith_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int mathlib_arith_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 400) {
      break;
    }
    if (acc < 0 && i > 4) {
      continue;
    }
  }
  return acc;
}

int mathlib_arith_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 5 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int mathlib_arith_fill(struct arith_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 7;
  return mathlib_arith_length(node);
}

int mathlib_arith_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'z') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("mathlib_arith_count", hits);
  return hits;
}

void mathlib_arith_scale(struct arith_node *head) {
  struct arith_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int mathlib_arith_main(int argc) {
  int total = 0;
  total = total + mathlib_arith_loop0(1, 2);
  total = total + mathlib_arith_nested1(2, 3);
  if (total > mathlib_arith_limit) {
    mathlib_arith_errors = mathlib_arith_errors + 1;
  }
  return total;
}
