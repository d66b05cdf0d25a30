#include <stdlib.h>
/* listkit/util.c */
struct util_node {
  int key;
  int value;
  char *label;
  struct util_node *next;
};

struct util_node *listkit_util_alloc();

int listkit_util_limit = 49;
int listkit_util_errors;
char *listkit_util_name = "listkit_util";

struct util_node *listkit_util_push(struct util_node *head, int key, int value) {
  struct util_node *n = listkit_util_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_util_length(struct util_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct util_node *listkit_util_find(struct util_node *head, int key) {
  struct util_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_util_value_or(struct util_node *head, int key, int fallback) {
  struct util_node *hit = listkit_util_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_util_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 1700) {
      break;
    }
    if (acc < 0 && i > 17) {
      continue;
    }
  }
  return acc;
}

int listkit_util_nested1(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 5 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_util_branchy2(int x, int y) {
  int result;
  // pick the larger, biased by 4
  if (x > y || x == 4) {
    result = x - y;
  } else if (y > 4 && !x) {
    result = y + 4;
  } else {
    result = 0;
  }
  return result;
}

int listkit_util_fill(struct util_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return listkit_util_length(node);
}

int listkit_util_count(char *text, char *pattern) {
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
  log_count("listkit_util_count", hits);
  return hits;
}

void listkit_util_scale(struct util_node *head) {
  struct util_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 2;
    cur = cur->next;
  }
}

int listkit_util_main(int argc) {
  int total = 0;
  total = total + listkit_util_loop0(1, 2);
  total = total + listkit_util_nested1(2, 3);
  total = total + listkit_util_branchy2(3, 4);
  if (total > listkit_util_limit) {
    listkit_util_errors = listkit_util_errors + 1;
  }
  return total;
}
