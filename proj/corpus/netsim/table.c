#include <stdlib.h>
/* netsim/table.c */
struct table_node {
  int key;
  int value;
  char *label;
  struct table_node *next;
};

struct table_node *netsim_table_alloc();

int netsim_table_limit = 121;
int netsim_table_errors;
char *netsim_table_name = "netsim_table";

struct table_node *netsim_table_push(struct table_node *head, int key, int value) {
  struct table_node *n = netsim_table_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_table_length(struct table_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct table_node *netsim_table_find(struct table_node *head, int key) {
  struct table_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_table_value_or(struct table_node *head, int key, int fallback) {
  struct table_node *hit = netsim_table_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_table_nested0(int rows, int cols) {
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

int netsim_table_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 16
  if (x > y || x == 16) {
    result = x - y;
  } else if (y > 16 && !x) {
    result = y + 16;
  } else {
    result = 0;
  }
  return result;
}

int netsim_table_loop2(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 3) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 4000) {
      break;
    }
    if (acc < 0 && i > 40) {
      continue;
    }
  }
  return acc;
}

int netsim_table_fill(struct table_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return netsim_table_length(node);
}

int netsim_table_count(char *text, char *pattern) {
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
  log_count("netsim_table_count", hits);
  return hits;
}

void netsim_table_scale(struct table_node *head) {
  struct table_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int netsim_table_main(int argc) {
  int total = 0;
  total = total + netsim_table_nested0(1, 2);
  total = total + netsim_table_branchy1(2, 3);
  total = total + netsim_table_loop2(3, 4);
  if (total > netsim_table_limit) {
    netsim_table_errors = netsim_table_errors + 1;
  }
  return total;
}
