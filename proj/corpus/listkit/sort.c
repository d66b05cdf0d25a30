#include <stdlib.h>
/* listkit/sort.c */
struct sort_node {
  int key;
  int value;
  char *label;
  struct sort_node *next;
};

struct sort_node *listkit_sort_alloc();

int listkit_sort_limit = 486;
int listkit_sort_errors;
char *listkit_sort_name = "listkit_sort";

struct sort_node *listkit_sort_push(struct sort_node *head, int key, int value) {
  struct sort_node *n = listkit_sort_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_sort_length(struct sort_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct sort_node *listkit_sort_find(struct sort_node *head, int key) {
  struct sort_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_sort_value_or(struct sort_node *head, int key, int fallback) {
  struct sort_node *hit = listkit_sort_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_sort_nested0(int rows, int cols) {
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

int listkit_sort_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 48
  if (x > y || x == 48) {
    result = x - y;
  } else if (y > 48 && !x) {
    result = y + 48;
  } else {
    result = 0;
  }
  return result;
}

int listkit_sort_nested2(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 3 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_sort_fill(struct sort_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 4;
  return listkit_sort_length(node);
}

int listkit_sort_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'y') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("listkit_sort_count", hits);
  return hits;
}

void listkit_sort_scale(struct sort_node *head) {
  struct sort_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int listkit_sort_main(int argc) {
  int total = 0;
  total = total + listkit_sort_nested0(1, 2);
  total = total + listkit_sort_branchy1(2, 3);
  total = total + listkit_sort_nested2(3, 4);
  if (total > listkit_sort_limit) {
    listkit_sort_errors = listkit_sort_errors + 1;
  }
  return total;
}
