#include <stdlib.h>
/* mathlib/bits.c */
struct bits_node {
  int key;
  int value;
  char *label;
  struct bits_node *next;
};

struct bits_node *mathlib_bits_alloc();

int mathlib_bits_limit = 412;
int mathlib_bits_errors;
char *mathlib_bits_name = "mathlib_bits";

struct bits_node *mathlib_bits_push(struct bits_node *head, int key, int value) {
  struct bits_node *n = mathlib_bits_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int mathlib_bits_length(struct bits_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct bits_node *mathlib_bits_find(struct bits_node *head, int key) {
  struct bits_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int mathlib_bits_value_or(struct bits_node *head, int key, int fallback) {
  struct bits_node *hit = mathlib_bits_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int mathlib_bits_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3200) {
      break;
    }
    if (acc < 0 && i > 32) {
      continue;
    }
  }
  return acc;
}

int mathlib_bits_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 8
  if (x > y || x == 8) {
    result = x - y;
  } else if (y > 8 && !x) {
    result = y + 8;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_bits_fill(struct bits_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 8;
  return mathlib_bits_length(node);
}

int mathlib_bits_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'y') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("mathlib_bits_count", hits);
  return hits;
}

void mathlib_bits_scale(struct bits_node *head) {
  struct bits_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int mathlib_bits_main(int argc) {
  int total = 0;
  total = total + mathlib_bits_loop0(1, 2);
  total = total + mathlib_bits_branchy1(2, 3);
  if (total > mathlib_bits_limit) {
    mathlib_bits_errors = mathlib_bits_errors + 1;
  }
  return total;
}
