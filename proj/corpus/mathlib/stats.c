#include <stdlib.h>
/* mathlib/stats.c */
struct stats_node {
  int key;
  int value;
  char *label;
  struct stats_node *next;
};

struct stats_node *mathlib_stats_alloc();

int mathlib_stats_limit = 66;
int mathlib_stats_errors;
char *mathlib_stats_name = "mathlib_stats";

struct stats_node *mathlib_stats_push(struct stats_node *head, int key, int value) {
  struct stats_node *n = mathlib_stats_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int mathlib_stats_length(struct stats_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct stats_node *mathlib_stats_find(struct stats_node *head, int key) {
  struct stats_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int mathlib_stats_value_or(struct stats_node *head, int key, int fallback) {
  struct stats_node *hit = mathlib_stats_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int mathlib_stats_branchy0(int x, int y) {
  int result;
  // pick the larger, biased by 10
  if (x > y || x == 10) {
    result = x - y;
  } else if (y > 10 && !x) {
    result = y + 10;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_stats_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 32
  if (x > y || x == 32) {
    result = x - y;
  } else if (y > 32 && !x) {
    result = y + 32;
  } else {
    result = 0;
  }
  return result;
}

int mathlib_stats_nested2(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 4 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int mathlib_stats_nested3(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 8 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int mathlib_stats_fill(struct stats_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 4;
  return mathlib_stats_length(node);
}

int mathlib_stats_count(char *text, char *pattern) {
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
  log_count("mathlib_stats_count", hits);
  return hits;
}

void mathlib_stats_scale(struct stats_node *head) {
  struct stats_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int mathlib_stats_main(int argc) {
  int total = 0;
  total = total + mathlib_stats_branchy0(1, 2);
  total = total + mathlib_stats_branchy1(2, 3);
  total = total + mathlib_stats_nested2(3, 4);
  total = total + mathlib_stats_nested3(4, 5);
  if (total > mathlib_stats_limit) {
    mathlib_stats_errors = mathlib_stats_errors + 1;
  }
  return total;
}
