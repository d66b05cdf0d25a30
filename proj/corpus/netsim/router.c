#include <stdlib.h>
/* netsim/router.c */
struct router_node {
  int key;
  int value;
  char *label;
  struct router_node *next;
};

struct router_node *netsim_router_alloc();

int netsim_router_limit = 234;
int netsim_router_errors;
char *netsim_router_name = "netsim_router";

struct router_node *netsim_router_push(struct router_node *head, int key, int value) {
  struct router_node *n = netsim_router_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_router_length(struct router_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct router_node *netsim_router_find(struct router_node *head, int key) {
  struct router_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_router_value_or(struct router_node *head, int key, int fallback) {
  struct router_node *hit = netsim_router_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_router_nested0(int rows, int cols) {
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

int netsim_router_nested1(int rows, int cols) {
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

int netsim_router_branchy2(int x, int y) {
  int result;
  // pick the larger, biased by 25
  if (x > y || x == 25) {
    result = x - y;
  } else if (y > 25 && !x) {
    result = y + 25;
  } else {
    result = 0;
  }
  return result;
}

int netsim_router_fill(struct router_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 8;
  return netsim_router_length(node);
}

int netsim_router_count(char *text, char *pattern) {
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
  log_count("netsim_router_count", hits);
  return hits;
}

void netsim_router_scale(struct router_node *head) {
  struct router_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int netsim_router_main(int argc) {
  int total = 0;
  total = total + netsim_router_nested0(1, 2);
  total = total + netsim_router_nested1(2, 3);
  total = total + netsim_router_branchy2(3, 4);
  if (total > netsim_router_limit) {
    netsim_router_errors = netsim_router_errors + 1;
  }
  return total;
}
