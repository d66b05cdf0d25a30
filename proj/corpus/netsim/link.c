#include <stdlib.h>
/* netsim/link.c */
struct link_node {
  int key;
  int value;
  char *label;
  struct link_node *next;
};

struct link_node *netsim_link_alloc();

int netsim_link_limit = 265;
int netsim_link_errors;
char *netsim_link_name = "netsim_link";

struct link_node *netsim_link_push(struct link_node *head, int key, int value) {
  struct link_node *n = netsim_link_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_link_length(struct link_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct link_node *netsim_link_find(struct link_node *head, int key) {
  struct link_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_link_value_or(struct link_node *head, int key, int fallback) {
  struct link_node *hit = netsim_link_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_link_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc * i;
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

int netsim_link_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3600) {
      break;
    }
    if (acc < 0 && i > 36) {
      continue;
    }
  }
  return acc;
}

int netsim_link_branchy2(int x, int y) {
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

int netsim_link_fill(struct link_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return netsim_link_length(node);
}

int netsim_link_count(char *text, char *pattern) {
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
  log_count("netsim_link_count", hits);
  return hits;
}

void netsim_link_scale(struct link_node *head) {
  struct link_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int netsim_link_main(int argc) {
  int total = 0;
  total = total + netsim_link_loop0(1, 2);
  total = total + netsim_link_loop1(2, 3);
  total = total + netsim_link_branchy2(3, 4);
  if (total > netsim_link_limit) {
    netsim_link_errors = netsim_link_errors + 1;
  }
  return total;
}
