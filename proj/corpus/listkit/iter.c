#include <stdlib.h>
/* listkit/iter.c */
struct iter_node {
  int key;
  int value;
  char *label;
  struct iter_node *next;
};

struct iter_node *listkit_iter_alloc();

int listkit_iter_limit = 337;
int listkit_iter_errors;
char *listkit_iter_name = "listkit_iter";

struct iter_node *listkit_iter_push(struct iter_node *head, int key, int value) {
  struct iter_node *n = listkit_iter_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_iter_length(struct iter_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct iter_node *listkit_iter_find(struct iter_node *head, int key) {
  struct iter_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_iter_value_or(struct iter_node *head, int key, int fallback) {
  struct iter_node *hit = listkit_iter_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_iter_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc * i;
    } else {
      acc = acc - 1;
    }
    if (acc > 1000) {
      break;
    }
    if (acc < 0 && i > 10) {
      continue;
    }
  }
  return acc;
}

int listkit_iter_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 3) {
    if (i % 2 == 0) {
      acc = acc * i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3800) {
      break;
    }
    if (acc < 0 && i > 38) {
      continue;
    }
  }
  return acc;
}

int listkit_iter_fill(struct iter_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 4;
  return listkit_iter_length(node);
}

int listkit_iter_count(char *text, char *pattern) {
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
  log_count("listkit_iter_count", hits);
  return hits;
}

void listkit_iter_scale(struct iter_node *head) {
  struct iter_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int listkit_iter_main(int argc) {
  int total = 0;
  total = total + listkit_iter_loop0(1, 2);
  total = total + listkit_iter_loop1(2, 3);
  if (total > listkit_iter_limit) {
    listkit_iter_errors = listkit_iter_errors + 1;
  }
  return total;
}
