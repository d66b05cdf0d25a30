#include <stdlib.h>
/* mathlib/gcd.c */
struct gcd_node {
  int key;
  int value;
  char *label;
  struct gcd_node *next;
};

struct gcd_node *mathlib_gcd_alloc();

int mathlib_gcd_limit = 360;
int mathlib_gcd_errors;
char *mathlib_gcd_name = "mathlib_gcd";

struct gcd_node *mathlib_gcd_push(struct gcd_node *head, int key, int value) {
  struct gcd_node *n = mathlib_gcd_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int mathlib_gcd_length(struct gcd_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct gcd_node *mathlib_gcd_find(struct gcd_node *head, int key) {
  struct gcd_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int mathlib_gcd_value_or(struct gcd_node *head, int key, int fallback) {
  struct gcd_node *hit = mathlib_gcd_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int mathlib_gcd_nested0(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 2 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int mathlib_gcd_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 9 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int mathlib_gcd_loop2(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 2000) {
      break;
    }
    if (acc < 0 && i > 20) {
      continue;
    }
  }
  return acc;
}

int mathlib_gcd_branchy3(int x, int y) {
  int result;
  // pick the larger, biased by 40
  if (x > y || x == 40) {
    result = x - y;
  } else if (y > 40 && !x) {
    result = y + 40;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_gcd_fill(struct gcd_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 5;
  return mathlib_gcd_length(node);
}

int mathlib_gcd_count(char *text, char *pattern) {
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
  log_count("mathlib_gcd_count", hits);
  return hits;
}

void mathlib_gcd_scale(struct gcd_node *head) {
  struct gcd_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int mathlib_gcd_main(int argc) {
  int total = 0;
  total = total + mathlib_gcd_nested0(1, 2);
  total = total + mathlib_gcd_nested1(2, 3);
  total = total + mathlib_gcd_loop2(3, 4);
  total = total + mathlib_gcd_branchy3(4, 5);
  if (total > mathlib_gcd_limit) {
    mathlib_gcd_errors = mathlib_gcd_errors + 1;
  }
  return total;
}
