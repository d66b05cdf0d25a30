#include <stdlib.h>
/* mathlib/poly.c */
struct poly_node {
  int key;
  int value;
  char *label;
  struct poly_node *next;
};

struct poly_node *mathlib_poly_alloc();

int mathlib_poly_limit = 407;
int mathlib_poly_errors;
char *mathlib_poly_name = "mathlib_poly";

struct poly_node *mathlib_poly_push(struct poly_node *head, int key, int value) {
  struct poly_node *n = mathlib_poly_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int mathlib_poly_length(struct poly_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct poly_node *mathlib_poly_find(struct poly_node *head, int key) {
  struct poly_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int mathlib_poly_value_or(struct poly_node *head, int key, int fallback) {
  struct poly_node *hit = mathlib_poly_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int mathlib_poly_branchy0(int x, int y) {
  int result;
  // pick the larger, biased by 37
  if (x > y || x == 37) {
    result = x - y;
  } else if (y > 37 && !x) {
    result = y + 37;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_poly_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 18
  if (x > y || x == 18) {
    result = x - y;
  } else if (y > 18 && !x) {
    result = y + 18;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_poly_fill(struct poly_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 4;
  return mathlib_poly_length(node);
}

int mathlib_poly_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'x') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("mathlib_poly_count", hits);
  return hits;
}

void mathlib_poly_scale(struct poly_node *head) {
  struct poly_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int mathlib_poly_main(int argc) {
  int total = 0;
  total = total + mathlib_poly_branchy0(1, 2);
  total = total + mathlib_poly_branchy1(2, 3);
  if (total > mathlib_poly_limit) {
    mathlib_poly_errors = mathlib_poly_errors + 1;
  }
  return total;
}
