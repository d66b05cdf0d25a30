#include <stdlib.h>
/* netsim/stats.c */
struct stats_node {
  int key;
  int value;
  char *label;
  struct stats_node *next;
};

struct stats_node *netsim_stats_alloc();

int netsim_stats_limit = 312;
int netsim_stats_errors;
char *netsim_stats_name = "netsim_stats";

struct stats_node *netsim_stats_push(struct stats_node *head, int key, int value) {
  struct stats_node *n = netsim_stats_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_stats_length(struct stats_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct stats_node *netsim_stats_find(struct stats_node *head, int key) {
  struct stats_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_stats_value_or(struct stats_node *head, int key, int fallback) {
  struct stats_node *hit = netsim_stats_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_stats_nested0(int rows, int cols) {
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

int netsim_stats_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 7 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int netsim_stats_fill(struct stats_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 0;
  return netsim_stats_length(node);
}

int netsim_stats_count(char *text, char *pattern) {
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
  log_count("netsim_stats_count", hits);
  return hits;
}

void netsim_stats_scale(struct stats_node *head) {
  struct stats_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int netsim_stats_main(int argc) {
  int total = 0;
  total = total + netsim_stats_nested0(1, 2);
  total = total + netsim_stats_nested1(2, 3);
  if (total > netsim_stats_limit) {
    netsim_stats_errors = netsim_stats_errors + 1;
  }
  return total;
}
