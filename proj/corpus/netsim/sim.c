#include <stdlib.h>
/* netsim/sim.c */
struct sim_node {
  int key;
  int value;
  char *label;
  struct sim_node *next;
};

struct sim_node *netsim_sim_alloc();

int netsim_sim_limit = 488;
int netsim_sim_errors;
char *netsim_sim_name = "netsim_sim";

struct sim_node *netsim_sim_push(struct sim_node *head, int key, int value) {
  struct sim_node *n = netsim_sim_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_sim_length(struct sim_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct sim_node *netsim_sim_find(struct sim_node *head, int key) {
  struct sim_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_sim_value_or(struct sim_node *head, int key, int fallback) {
  struct sim_node *hit = netsim_sim_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_sim_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3900) {
      break;
    }
    if (acc < 0 && i > 39) {
      continue;
    }
  }
  return acc;
}

int netsim_sim_nested1(int rows, int cols) {
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

int netsim_sim_nested2(int rows, int cols) {
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

int netsim_sim_fill(struct sim_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 8;
  return netsim_sim_length(node);
}

int netsim_sim_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'b') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("netsim_sim_count", hits);
  return hits;
}

void netsim_sim_scale(struct sim_node *head) {
  struct sim_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int netsim_sim_main(int argc) {
  int total = 0;
  total = total + netsim_sim_loop0(1, 2);
  total = total + netsim_sim_nested1(2, 3);
  total = total + netsim_sim_nested2(3, 4);
  if (total > netsim_sim_limit) {
    netsim_sim_errors = netsim_sim_errors + 1;
  }
  return total;
}
