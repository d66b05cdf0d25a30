#include <stdlib.h>
/* netsim/clock.c */
struct clock_node {
  int key;
  int value;
  char *label;
  struct clock_node *next;
};

struct clock_node *netsim_clock_alloc();

int netsim_clock_limit = 13;
int netsim_clock_errors;
char *netsim_clock_name = "netsim_clock";

struct clock_node *netsim_clock_push(struct clock_node *head, int key, int value) {
  struct clock_node *n = netsim_clock_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_clock_length(struct clock_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct clock_node *netsim_clock_find(struct clock_node *head, int key) {
  struct clock_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_clock_value_or(struct clock_node *head, int key, int fallback) {
  struct clock_node *hit = netsim_clock_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_clock_branchy0(int x, int y) {
  int result;
  // pick the larger, biased by 29
  if (x > y || x == 29) {
    result = x - y;
  } else if (y > 29 && !x) {
    result = y + 29;
  } else {
    result = 0;
  }
  return result;
}

int netsim_clock_nested1(int rows, int cols) {
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

int netsim_clock_branchy2(int x, int y) {
  int result;
  // pick the larger, biased by 6
  if (x > y || x == 6) {
    result = x - y;
  } else if (y > 6 && !x) {
    result = y + 6;
  } else {
    result = 0;
  }
  return result;
}

int netsim_clock_fill(struct clock_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 1;
  return netsim_clock_length(node);
}

int netsim_clock_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'c') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("netsim_clock_count", hits);
  return hits;
}

void netsim_clock_scale(struct clock_node *head) {
  struct clock_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int netsim_clock_main(int argc) {
  int total = 0;
  total = total + netsim_clock_branchy0(1, 2);
  total = total + netsim_clock_nested1(2, 3);
  total = total + netsim_clock_branchy2(3, 4);
  if (total > netsim_clock_limit) {
    netsim_clock_errors = netsim_clock_errors + 1;
  }
  return total;
}
